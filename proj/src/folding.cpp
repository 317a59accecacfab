#include "cxb/folding.hpp"

#include <algorithm>
#include <map>

namespace cxb {

Folding Folding::make(const CoxeterGraph& source, const CoxeterGraph& target,
                      const std::vector<int>& vertex_map) {
  if ((int)vertex_map.size() != source.rank())
    throw std::invalid_argument("Folding: vertex_map size mismatch");
  Folding f;
  f.source = source;
  f.target = target;
  f.vertex_map = vertex_map;
  f.fibers.assign(target.rank(), {});
  for (int i = 0; i < source.rank(); ++i) {
    int t = vertex_map[i];
    if (t < 0 || t >= target.rank())
      throw std::invalid_argument("Folding: vertex_map out of range");
    f.fibers[t].push_back(i);
  }
  for (auto& fib : f.fibers)
    if (fib.empty()) throw std::invalid_argument("Folding: empty fiber");
  f.source_type = classify_finite(source);
  f.target_type = classify_finite(target);
  return f;
}

Folding Folding::identity_of(const CoxeterGraph& g) {
  std::vector<int> id(g.rank());
  for (int i = 0; i < g.rank(); ++i) id[i] = i;
  return make(g, g, id);
}

// ---------------------------------------------------------------------------

namespace {

// connected components of the bipartite subgraph between two fibers; each
// returned as a simply laced CoxeterGraph for classification
struct CrossEdges {
  std::vector<std::pair<int, int>> edges;  // source-graph vertex pairs
};

int coxeter_number_of_component(const std::vector<int>& verts,
                                const std::vector<std::pair<int, int>>& edges,
                                std::string* fail) {
  CoxeterGraph g((int)verts.size());
  auto idx = [&](int v) {
    return (int)(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (auto [a, b] : edges) g.set_weight(idx(a), idx(b), 3);
  TypeInfo t = classify_finite(g);
  if (!t.finite()) {
    *fail = "edge preimage component is not of finite type";
    return -1;
  }
  if (t.family != 'A' && t.family != 'D' && t.family != 'E') {
    *fail = "edge preimage component is not simply laced (" + t.label + ")";
    return -1;
  }
  return t.coxeter_number;
}

}  // namespace

FoldingCheck validate_folding(const Folding& f) {
  FoldingCheck out;
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.message = msg;
    return out;
  };
  if (!f.source.connected()) return fail("source graph is not connected");
  if (!f.source.simply_laced()) return fail("source graph is not simply laced");

  int nS = f.source.rank(), nT = f.target.rank();
  // fibers independent
  for (int i = 0; i < nS; ++i)
    for (int j = i + 1; j < nS; ++j)
      if (f.vertex_map[i] == f.vertex_map[j] && f.source.weight(i, j) >= 3)
        return fail("fiber of vertex " + std::to_string(f.vertex_map[i] + 1) +
                    " is not independent");

  for (int a = 0; a < nT; ++a)
    for (int b = a + 1; b < nT; ++b) {
      int m = f.target.weight(a, b);
      std::vector<std::pair<int, int>> cross;
      for (int i : f.fibers[a])
        for (int j : f.fibers[b])
          if (f.source.weight(i, j) >= 3) cross.push_back({i, j});
      if (m == 2) {
        if (!cross.empty())
          return fail("preimage of the non-edge " + std::to_string(a + 1) + "-" +
                      std::to_string(b + 1) + " is nonempty");
        continue;
      }
      if (cross.empty())
        continue;  // k-fold trivial with k = 0
      // split into connected components
      std::vector<int> verts;
      for (auto [i, j] : cross) { verts.push_back(i); verts.push_back(j); }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      std::map<int, int> comp;
      int ncomp = 0;
      for (int v : verts)
        if (!comp.count(v)) {
          std::vector<int> stack = {v};
          comp[v] = ncomp;
          while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [i, j] : cross) {
              int other = -1;
              if (i == x) other = j;
              if (j == x) other = i;
              if (other >= 0 && !comp.count(other)) {
                comp[other] = ncomp;
                stack.push_back(other);
              }
            }
          }
          ++ncomp;
        }
      for (int c = 0; c < ncomp; ++c) {
        std::vector<int> cv;
        std::vector<std::pair<int, int>> ce;
        for (int v : verts)
          if (comp[v] == c) cv.push_back(v);
        for (auto [i, j] : cross)
          if (comp[i] == c) ce.push_back({i, j});
        std::string why;
        int h = coxeter_number_of_component(cv, ce, &why);
        if (h < 0)
          return fail("edge " + std::to_string(a + 1) + "-" +
                      std::to_string(b + 1) + ": " + why);
        if (h != m)
          return fail("edge " + std::to_string(a + 1) + "-" +
                      std::to_string(b + 1) + ": component has Coxeter number " +
                      std::to_string(h) + ", edge weight is " + std::to_string(m));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// catalog

namespace {

Folding bipartite_folding(const std::string& lambda_label, int m) {
  CoxeterGraph src = standard_graph(lambda_label);
  CoxeterGraph tgt(2);
  tgt.set_weight(0, 1, m);
  // two-color the source; the class of vertex 0 maps to target vertex 0
  int n = src.rank();
  std::vector<int> color(n, -1);
  std::vector<int> stack = {0};
  color[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : src.neighbors(v))
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        stack.push_back(u);
      }
  }
  return Folding::make(src, tgt, color);
}

}  // namespace

std::vector<Folding> folding_catalog(const std::string& delta_label) {
  TypeInfo t = type_by_label(delta_label);
  CoxeterGraph tgt = standard_graph(delta_label);
  std::vector<Folding> out;
  switch (t.family) {
    case 'A':
      if (t.rank == 2) return {bipartite_folding("A2", 3)};
      return {Folding::identity_of(tgt)};
    case 'D':
    case 'E':
      return {Folding::identity_of(tgt)};
    case 'B': {
      int n = t.rank;
      if (n == 2) return {bipartite_folding("A3", 4)};
      {
        // D_{n+1} -> B_n: fork {0,1} onto n-1, path vertex k onto n-k
        CoxeterGraph src = standard_graph("D" + std::to_string(n + 1));
        std::vector<int> vm(n + 1);
        vm[0] = vm[1] = n - 1;
        for (int k = 2; k <= n; ++k) vm[k] = n - k;
        out.push_back(Folding::make(src, tgt, vm));
      }
      {
        // A_{2n-1} -> B_n folded across the middle
        CoxeterGraph src = standard_graph("A" + std::to_string(2 * n - 1));
        std::vector<int> vm(2 * n - 1);
        for (int i = 0; i < 2 * n - 1; ++i) vm[i] = i < n ? i : 2 * n - 2 - i;
        out.push_back(Folding::make(src, tgt, vm));
      }
      return out;
    }
    case 'F': {
      // E6 -> F4
      CoxeterGraph src = standard_graph("E6");
      std::vector<int> vm = {3, 2, 1, 0, 2, 3};
      return {Folding::make(src, tgt, vm)};
    }
    case 'G': {
      // D4 -> G2 (the three leaves over vertex 1), then A5
      CoxeterGraph src = standard_graph("D4");
      std::vector<int> vm = {0, 0, 1, 0};
      out.push_back(Folding::make(src, tgt, vm));
      out.push_back(bipartite_folding("A5", 6));
      return out;
    }
    case 'H': {
      if (t.rank == 2) return {bipartite_folding("A4", 5)};
      if (t.rank == 3) {
        // D6 -> H3
        CoxeterGraph src = standard_graph("D6");
        std::vector<int> vm = {0, 2, 1, 0, 1, 2};
        return {Folding::make(src, tgt, vm)};
      }
      // E8 -> H4
      CoxeterGraph src = standard_graph("E8");
      std::vector<int> vm = {3, 2, 1, 0, 0, 1, 2, 3};
      return {Folding::make(src, tgt, vm)};
    }
    case 'I': {
      int m = t.m;
      out.push_back(bipartite_folding("A" + std::to_string(m - 1), m));
      if (m % 2 == 0 && m >= 6)
        out.push_back(bipartite_folding("D" + std::to_string(m / 2 + 1), m));
      if (m == 12) out.push_back(bipartite_folding("E6", m));
      if (m == 18) out.push_back(bipartite_folding("E7", m));
      if (m == 30) out.push_back(bipartite_folding("E8", m));
      return out;
    }
  }
  throw std::invalid_argument("folding_catalog: " + delta_label);
}

Folding default_folding(const std::string& delta_label) {
  return folding_catalog(delta_label).front();
}

Folding find_folding(const std::string& delta_label,
                     const std::string& lambda_label) {
  TypeInfo want = type_by_label(lambda_label);
  for (auto& f : folding_catalog(delta_label))
    if (f.source_type.label == want.label) return f;
  throw std::invalid_argument("no catalog folding " + delta_label + " <- " +
                              lambda_label);
}

// ---------------------------------------------------------------------------

WeightedQuiver fold_quiver(const Folding& f, const IntMatrix& B) {
  int nS = f.source.rank(), nT = f.target.rank();
  if (B.rows() != nS || B.cols() != nS)
    throw std::invalid_argument("fold_quiver: matrix size mismatch");
  // fibers stay independent along mutation-reachable seeds
  for (int i = 0; i < nS; ++i)
    for (int j = 0; j < nS; ++j)
      if (i != j && f.vertex_map[i] == f.vertex_map[j] && B.at(i, j) != 0)
        throw fold_error("fold_quiver: fiber of vertex " +
                         std::to_string(f.vertex_map[i] + 1) +
                         " is not independent in the quiver");
  WeightedQuiver q(nT);
  for (int a = 0; a < nT; ++a)
    for (int b = 0; b < nT; ++b) {
      if (a == b) continue;
      // arrows from fiber a to fiber b
      std::vector<std::pair<int, int>> cross;
      bool backwards = false;
      for (int i : f.fibers[a])
        for (int j : f.fibers[b]) {
          long long v = B.at(i, j);
          if (v == 0) continue;
          if (v < 0) backwards = true;
          if (v > 1 || v < -1)
            throw fold_error("fold_quiver: multiple arrow between vertices");
          if (v > 0) cross.push_back({i, j});
        }
      if (cross.empty()) continue;
      if (backwards)
        throw fold_error("fold_quiver: mixed orientation between fibers " +
                         std::to_string(a + 1) + " and " + std::to_string(b + 1));
      // classify components of the underlying bipartite graph
      std::vector<int> verts;
      for (auto [i, j] : cross) { verts.push_back(i); verts.push_back(j); }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      std::vector<int> comp(verts.size(), -1);
      auto idx = [&](int v) {
        return (int)(std::lower_bound(verts.begin(), verts.end(), v) -
                     verts.begin());
      };
      int ncomp = 0;
      for (size_t s = 0; s < verts.size(); ++s)
        if (comp[s] < 0) {
          std::vector<int> stack = {(int)s};
          comp[s] = ncomp;
          while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [i, j] : cross) {
              int xi = idx(i), xj = idx(j);
              int other = xi == x ? xj : xj == x ? xi : -1;
              if (other >= 0 && comp[other] < 0) {
                comp[other] = ncomp;
                stack.push_back(other);
              }
            }
          }
          ++ncomp;
        }
      int weight = 0;
      for (int c = 0; c < ncomp; ++c) {
        std::vector<int> cv;
        std::vector<std::pair<int, int>> ce;
        for (size_t s = 0; s < verts.size(); ++s)
          if (comp[s] == c) cv.push_back(verts[s]);
        for (auto [i, j] : cross)
          if (comp[idx(i)] == c) ce.push_back({i, j});
        std::string why;
        int h = coxeter_number_of_component(cv, ce, &why);
        if (h < 0) throw fold_error("fold_quiver: " + why);
        if (weight == 0) weight = h;
        if (weight != h)
          throw fold_error(
              "fold_quiver: components with distinct Coxeter numbers (" +
              std::to_string(weight) + " vs " + std::to_string(h) + ")");
      }
      q.set_arrow(a, b, weight);
    }
  return q;
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json graph_to_json(const CoxeterGraph& g) {
  nlohmann::ordered_json j;
  j["rank"] = g.rank();
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b, m] : g.edges()) edges.push_back({a + 1, b + 1, m});
  j["edges"] = edges;
  return j;
}

CoxeterGraph graph_from_json(const nlohmann::json& j) {
  CoxeterGraph g(j.at("rank").get<int>());
  for (const auto& e : j.at("edges"))
    g.set_weight(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1, e.at(2).get<int>());
  return g;
}

nlohmann::ordered_json folding_to_json(const Folding& f) {
  nlohmann::ordered_json j;
  j["source"] = graph_to_json(f.source);
  j["source_type"] = f.source_type.label;
  j["target"] = graph_to_json(f.target);
  j["target_type"] = f.target_type.label;
  auto vm = nlohmann::ordered_json::array();
  for (int i = 0; i < f.source.rank(); ++i)
    vm.push_back({i + 1, f.vertex_map[i] + 1});
  j["vertex_map"] = vm;
  return j;
}

}  // namespace cxb
