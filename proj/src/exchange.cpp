#include "cxb/exchange.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "cxb/intmatrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cxb {

int ExchangeGraph::vertex_of(const Seed& s) const {
  auto it = key_to_id.find(canonical_seed_key(fold, s));
  return it == key_to_id.end() ? -1 : it->second;
}

std::vector<std::vector<int>> ExchangeGraph::adjacency() const {
  std::vector<std::vector<int>> adj(reps.size());
  for (size_t v = 0; v < reps.size(); ++v)
    for (int w : out[v]) {
      adj[v].push_back(w);
      adj[w].push_back((int)v);
    }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

size_t ExchangeGraph::edge_count() const {
  size_t deg = 0;
  for (const auto& a : adjacency()) deg += a.size();
  return deg / 2;
}

std::vector<int> ExchangeGraph::edge_delta(int v, int k) const {
  Seed t = weighted_mutate(fold, reps[v], k);
  int w = out[v][k];
  std::vector<int> pi = match_columns(t, reps[w]);
  int nd = drank();
  std::vector<int> delta(nd, -1);
  for (int a = 0; a < nd; ++a) {
    for (int i : fold.fibers[a]) {
      int img = fold.vertex_map[pi[i]];
      if (delta[a] < 0) delta[a] = img;
      if (delta[a] != img)
        throw std::logic_error("edge_delta: relabeling does not respect fibers");
    }
  }
  return delta;
}

ExchangeGraph build_ceg(const Folding& f, const CegOptions& opt) {
  ExchangeGraph g;
  g.fold = f;
  g.orientation = opt.orientation;
  int nd = f.target.rank();

  Seed s0 = initial_seed(f, opt.orientation);
  g.key_to_id.emplace(canonical_seed_key(f, s0), 0);
  g.reps.push_back(s0);
  g.quivers.push_back(fold_quiver(f, s0.B));
  g.out.push_back(std::vector<int>(nd, -1));

  std::vector<int> frontier = {0};
  struct Arrival {
    Seed seed;
    std::string key;
  };
  while (!frontier.empty()) {
    size_t tasks = frontier.size() * nd;
    std::vector<Arrival> arr(tasks);
#ifdef _OPENMP
    int nthreads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
#endif
    for (size_t idx = 0; idx < tasks; ++idx) {
      int v = frontier[idx / nd];
      int k = (int)(idx % nd);
      arr[idx].seed = weighted_mutate(f, g.reps[v], k);
      arr[idx].key = canonical_seed_key(f, arr[idx].seed);
    }
    std::vector<int> next;
    for (size_t idx = 0; idx < tasks; ++idx) {
      int v = frontier[idx / nd];
      int k = (int)(idx % nd);
      auto it = g.key_to_id.find(arr[idx].key);
      if (it != g.key_to_id.end()) {
        g.out[v][k] = it->second;
        continue;
      }
      if (!c_columns_sign_coherent(arr[idx].seed.C))
        throw std::logic_error("build_ceg: c-vector sign-coherence violated");
      int id = (int)g.reps.size();
      g.key_to_id.emplace(arr[idx].key, id);
      g.reps.push_back(std::move(arr[idx].seed));
      g.quivers.push_back(fold_quiver(f, g.reps.back().B));
      g.out.push_back(std::vector<int>(nd, -1));
      g.out[v][k] = id;
      next.push_back(id);
      if (g.reps.size() > opt.max_vertices)
        throw resource_error("build_ceg: vertex budget exceeded");
    }
    frontier = std::move(next);
  }
  return g;
}

ExchangeGraph build_ceg_reference(const Folding& f, Orientation o,
                                  size_t max_vertices) {
  ExchangeGraph g;
  g.fold = f;
  g.orientation = o;
  int nd = f.target.rank();
  Seed s0 = initial_seed(f, o);
  g.key_to_id.emplace(canonical_seed_key_unrestricted(s0), 0);
  g.reps.push_back(s0);
  g.quivers.push_back(fold_quiver(f, s0.B));
  g.out.push_back(std::vector<int>(nd, -1));
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int k = 0; k < nd; ++k) {
      Seed t = weighted_mutate(f, g.reps[v], k);
      std::string key = canonical_seed_key_unrestricted(t);
      auto it = g.key_to_id.find(key);
      if (it != g.key_to_id.end()) {
        g.out[v][k] = it->second;
        continue;
      }
      int id = (int)g.reps.size();
      g.key_to_id.emplace(key, id);
      g.reps.push_back(std::move(t));
      g.quivers.push_back(fold_quiver(f, g.reps.back().B));
      g.out.push_back(std::vector<int>(nd, -1));
      g.out[v][k] = id;
      q.push(id);
      if (g.reps.size() > max_vertices)
        throw resource_error("build_ceg_reference: vertex budget exceeded");
    }
  }
  return g;
}

// ---------------------------------------------------------------------------

namespace {

// all c-vector columns of the fiber positive (green) or negative (red)
int fiber_color(const Folding& f, const Seed& s, int target_vertex) {
  int pos = 0, neg = 0;
  for (int i : f.fibers[target_vertex]) {
    int sign = 0;
    for (int r = 0; r < s.C.rows(); ++r) {
      long long v = s.C.at(r, i);
      if (v > 0) sign = 1;
      if (v < 0) sign = -1;
      if (sign) break;
    }
    if (sign > 0) ++pos;
    if (sign < 0) ++neg;
  }
  if (pos == (int)f.fibers[target_vertex].size()) return 1;
  if (neg == (int)f.fibers[target_vertex].size()) return -1;
  throw std::logic_error("fiber_color: mixed c-vector signs inside a fiber");
}

}  // namespace

std::vector<Polygon> enumerate_polygons(const ExchangeGraph& g) {
  std::vector<Polygon> out;
  std::map<std::vector<int>, size_t> seen;
  int nd = g.drank();
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    for (int a = 0; a < nd; ++a)
      for (int b = a + 1; b < nd; ++b) {
        int m = g.quivers[v].weight_between(a, b);
        std::vector<int> ids = {(int)v};
        std::vector<std::pair<int, int>> colors;  // (color_a, color_b) per step
        Seed s = g.reps[v];
        colors.push_back({fiber_color(g.fold, s, a), fiber_color(g.fold, s, b)});
        bool closed = false;
        for (int step = 1; step <= m + 2; ++step) {
          s = weighted_mutate(g.fold, s, step % 2 == 1 ? a : b);
          int id = g.vertex_of(s);
          if (id < 0) throw std::logic_error("enumerate_polygons: walk left graph");
          if (fold_quiver(g.fold, s.B).weight_between(a, b) != m)
            throw std::logic_error(
                "enumerate_polygons: pair weight changed along the walk");
          if (id == (int)v) {
            closed = step == m + 2;
            break;
          }
          ids.push_back(id);
          colors.push_back(
              {fiber_color(g.fold, s, a), fiber_color(g.fold, s, b)});
        }
        if (!closed || (int)ids.size() != m + 2)
          throw std::logic_error(
              "enumerate_polygons: alternating walk did not close after m+2 "
              "steps");
        std::vector<int> dedup = ids;
        std::sort(dedup.begin(), dedup.end());
        if (std::unique(dedup.begin(), dedup.end()) != dedup.end())
          throw std::logic_error("enumerate_polygons: repeated vertex in walk");
        if (seen.count(dedup)) continue;
        seen.emplace(dedup, out.size());

        int source = -1, sink = -1;
        for (size_t p = 0; p < ids.size(); ++p) {
          if (colors[p].first > 0 && colors[p].second > 0) {
            if (source >= 0)
              throw std::logic_error("enumerate_polygons: two sources");
            source = (int)p;
          }
          if (colors[p].first < 0 && colors[p].second < 0) {
            if (sink >= 0)
              throw std::logic_error("enumerate_polygons: two sinks");
            sink = (int)p;
          }
        }
        if (source < 0 || sink < 0)
          throw std::logic_error("enumerate_polygons: missing source or sink");
        int fwd = ((sink - source) % (m + 2) + (m + 2)) % (m + 2);
        int bwd = m + 2 - fwd;
        if (!((fwd == 2 && bwd == m) || (fwd == m && bwd == 2)))
          throw std::logic_error(
              "enumerate_polygons: source-sink arcs are not of lengths 2 and m");

        Polygon poly;
        poly.label_a = a;
        poly.label_b = b;
        poly.m = m;
        poly.source = ids[source];
        poly.sink = ids[sink];
        for (size_t p = 0; p < ids.size(); ++p)
          poly.vertices.push_back(ids[(source + p) % ids.size()]);
        out.push_back(std::move(poly));
      }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> distance_profile(
    const std::vector<std::vector<int>>& adj) {
  int n = (int)adj.size();
  std::vector<std::vector<int>> prof(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    std::sort(dist.begin(), dist.end());
    prof[s] = std::move(dist);
  }
  return prof;
}

bool extend_isomorphism(const std::vector<std::vector<int>>& a1,
                        const std::vector<std::vector<int>>& a2,
                        const std::vector<int>& class1,
                        const std::vector<int>& class2, std::vector<int>& map12,
                        std::vector<int>& map21, size_t depth) {
  if (depth == a1.size()) return true;
  // pick the unmapped vertex with the most mapped neighbors
  int best = -1, bestScore = -1;
  for (size_t v = 0; v < a1.size(); ++v) {
    if (map12[v] >= 0) continue;
    int score = 0;
    for (int w : a1[v])
      if (map12[w] >= 0) ++score;
    if (score > bestScore) { bestScore = score; best = (int)v; }
  }
  for (size_t c = 0; c < a2.size(); ++c) {
    if (map21[c] >= 0 || class2[c] != class1[best]) continue;
    bool ok = true;
    for (int w : a1[best]) {
      if (map12[w] < 0) continue;
      if (std::find(a2[c].begin(), a2[c].end(), map12[w]) == a2[c].end()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // degree of mapped neighbors must match in reverse too
    for (int w2 : a2[c]) {
      if (map21[w2] < 0) continue;
      if (std::find(a1[best].begin(), a1[best].end(), map21[w2]) ==
          a1[best].end()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map12[best] = (int)c;
    map21[c] = best;
    if (extend_isomorphism(a1, a2, class1, class2, map12, map21, depth + 1))
      return true;
    map12[best] = -1;
    map21[c] = -1;
  }
  return false;
}

}  // namespace

bool isomorphic(const ExchangeGraph& g1, const ExchangeGraph& g2) {
  auto a1 = g1.adjacency(), a2 = g2.adjacency();
  if (a1.size() != a2.size()) return false;
  auto p1 = distance_profile(a1), p2 = distance_profile(a2);
  // vertex classes by distance profile; multisets must agree
  std::map<std::vector<int>, int> classes;
  for (const auto& p : p1) classes.emplace(p, (int)classes.size());
  std::vector<int> c1(a1.size()), c2(a2.size());
  std::vector<int> h1(classes.size(), 0), h2(classes.size(), 0);
  for (size_t v = 0; v < a1.size(); ++v) {
    c1[v] = classes[p1[v]];
    ++h1[c1[v]];
  }
  for (size_t v = 0; v < a2.size(); ++v) {
    auto it = classes.find(p2[v]);
    if (it == classes.end()) return false;
    c2[v] = it->second;
    ++h2[c2[v]];
  }
  if (h1 != h2) return false;
  std::vector<int> map12(a1.size(), -1), map21(a2.size(), -1);
  return extend_isomorphism(a1, a2, c1, c2, map12, map21, 0);
}

// ---------------------------------------------------------------------------

std::vector<long long> h1_polygon_complex(const ExchangeGraph& g,
                                          const std::vector<Polygon>& polys) {
  size_t n = g.vertex_count();
  std::map<std::pair<int, int>, int> edge_index;
  auto adj = g.adjacency();
  for (size_t v = 0; v < n; ++v)
    for (int w : adj[v])
      if ((int)v < w)
        edge_index.emplace(std::make_pair((int)v, w), (int)edge_index.size());

  // spanning tree from the initial vertex
  std::vector<char> tree_edge(edge_index.size(), 0), seen(n, 0);
  std::queue<int> q;
  q.push(g.initial);
  seen[g.initial] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree_edge[edge_index.at({std::min(v, w), std::max(v, w)})] = 1;
      q.push(w);
    }
  }
  std::vector<int> nontree;  // edge index -> row
  std::vector<int> row_of(edge_index.size(), -1);
  for (auto& [e, idx] : edge_index)
    if (!tree_edge[idx]) {
      row_of[idx] = (int)nontree.size();
      nontree.push_back(idx);
    }
  long long cycle_rank = (long long)nontree.size();

  IntMatrix bd((int)nontree.size(), (int)polys.size());
  for (size_t p = 0; p < polys.size(); ++p) {
    const auto& vs = polys[p].vertices;
    for (size_t i = 0; i < vs.size(); ++i) {
      int x = vs[i], y = vs[(i + 1) % vs.size()];
      int idx = edge_index.at({std::min(x, y), std::max(x, y)});
      if (row_of[idx] < 0) continue;
      bd.at(row_of[idx], (int)p) += x < y ? 1 : -1;
    }
  }
  auto diag = smith_diagonal(bd);
  long long rank = 0;
  std::vector<long long> factors;
  for (long long d : diag)
    if (d != 0) {
      ++rank;
      if (d != 1) factors.push_back(d);
    }
  for (long long i = 0; i < cycle_rank - rank; ++i) factors.push_back(0);
  return factors;
}

// ---------------------------------------------------------------------------

std::string ceg_to_dot(const ExchangeGraph& g, bool oriented,
                       const std::vector<Polygon>* polys) {
  std::ostringstream os;
  if (oriented) {
    os << "digraph ceg {\n";
    for (size_t v = 0; v < g.vertex_count(); ++v)
      for (int k = 0; k < g.drank(); ++k)
        os << "  v" << v << " -> v" << g.out[v][k] << " [label=\"" << k + 1
           << "\"];\n";
  } else {
    os << "graph ceg {\n";
    auto adj = g.adjacency();
    for (size_t v = 0; v < g.vertex_count(); ++v)
      for (int w : adj[v])
        if ((int)v < w) os << "  v" << v << " -- v" << w << ";\n";
  }
  if (polys) {
    for (const auto& p : *polys) {
      os << "  // face m=" << p.m << ":";
      for (int v : p.vertices) os << " v" << v;
      os << "\n";
    }
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json ceg_to_json(const ExchangeGraph& g,
                                   const std::vector<Polygon>* polys) {
  nlohmann::ordered_json j;
  auto verts = nlohmann::ordered_json::array();
  for (size_t v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json vj;
    vj["id"] = v;
    auto arrows = nlohmann::ordered_json::array();
    const auto& q = g.quivers[v];
    for (int i = 0; i < q.n; ++i)
      for (int k = 0; k < q.n; ++k)
        if (q.arrow(i, k)) arrows.push_back({i + 1, k + 1, q.arrow(i, k)});
    vj["quiver"] = arrows;
    auto weights = nlohmann::ordered_json::array();
    for (int i = 0; i < q.n; ++i)
      for (int k = i + 1; k < q.n; ++k)
        weights.push_back({i + 1, k + 1, q.weight_between(i, k)});
    vj["weights"] = weights;
    verts.push_back(vj);
  }
  j["vertices"] = verts;
  auto edges = nlohmann::ordered_json::array();
  for (size_t v = 0; v < g.vertex_count(); ++v)
    for (int k = 0; k < g.drank(); ++k) {
      nlohmann::ordered_json ej;
      ej["src"] = v;
      ej["dst"] = g.out[v][k];
      ej["label"] = k + 1;
      edges.push_back(ej);
    }
  j["edges"] = edges;
  auto pj = nlohmann::ordered_json::array();
  if (polys)
    for (const auto& p : *polys) {
      nlohmann::ordered_json e;
      e["vertices"] = p.vertices;
      e["m"] = p.m;
      pj.push_back(e);
    }
  j["polygons"] = pj;
  return j;
}

}  // namespace cxb
