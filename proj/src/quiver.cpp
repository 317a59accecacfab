#include "cxb/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cxb {

Seed initial_seed(const Folding& f, Orientation o) {
  int n = f.source.rank();
  Seed s;
  s.B = IntMatrix(n, n);
  s.C = IntMatrix::identity(n);
  for (auto [i, j, m] : f.source.edges()) {
    int a = f.vertex_map[i], b = f.vertex_map[j];
    bool forward = a < b;
    if (o == Orientation::descending) forward = !forward;
    if (forward) {
      s.B.at(i, j) = 1;
      s.B.at(j, i) = -1;
    } else {
      s.B.at(j, i) = 1;
      s.B.at(i, j) = -1;
    }
  }
  return s;
}

void mutate_inplace(Seed& s, int k) {
  int n = s.B.rows();
  std::vector<long long> bk_row(n);
  for (int j = 0; j < n; ++j) bk_row[j] = s.B.at(k, j);
  auto pos = [](long long v) { return v > 0 ? v : 0; };
  auto neg = [](long long v) { return v < 0 ? -v : 0; };
  for (int i = 0; i < n; ++i) {
    long long bik = s.B.at(i, k);
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) continue;
      s.B.at(i, j) += pos(bik) * bk_row[j] + bik * neg(bk_row[j]);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (j == k) continue;
    s.B.at(k, j) = -bk_row[j];
  }
  for (int i = 0; i < n; ++i)
    if (i != k) s.B.at(i, k) = -s.B.at(i, k);

  for (int r = 0; r < n; ++r) {
    long long crk = s.C.at(r, k);
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      s.C.at(r, j) += pos(crk) * bk_row[j] + crk * neg(bk_row[j]);
    }
    s.C.at(r, k) = -crk;
  }
}

Seed mutate(const Seed& s, int k) {
  Seed out = s;
  mutate_inplace(out, k);
  return out;
}

Seed weighted_mutate(const Folding& f, const Seed& s, int target_vertex) {
  Seed out = s;
  for (int i : f.fibers.at(target_vertex)) mutate_inplace(out, i);
  return out;
}

bool c_columns_sign_coherent(const IntMatrix& C) {
  for (int j = 0; j < C.cols(); ++j) {
    bool pos = false, neg = false;
    for (int i = 0; i < C.rows(); ++i) {
      if (C.at(i, j) > 0) pos = true;
      if (C.at(i, j) < 0) neg = true;
    }
    if (pos && neg) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> sorted_column_order(const IntMatrix& C) {
  int n = C.cols();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    for (int r = 0; r < C.rows(); ++r) {
      if (C.at(r, a) != C.at(r, b)) return C.at(r, a) < C.at(r, b);
    }
    return false;
  });
  // columns of an invertible matrix are pairwise distinct
  for (int p = 0; p + 1 < n; ++p) {
    bool eq = true;
    for (int r = 0; r < C.rows() && eq; ++r)
      if (C.at(r, order[p]) != C.at(r, order[p + 1])) eq = false;
    if (eq) throw std::logic_error("seed key: duplicate c-vectors");
  }
  return order;
}

void append_int(std::string& s, long long v) {
  s += std::to_string(v);
  s += ',';
}

std::string seed_key_impl(const Seed& s, const std::vector<int>* fiber_of) {
  auto order = sorted_column_order(s.C);
  int n = s.B.rows();
  std::string key;
  key.reserve((size_t)n * (2 * n + 1) * 3);
  if (fiber_of) {
    // fiber pattern normalized by first occurrence
    std::vector<int> slot(n, -1);
    int next = 0;
    key += "P";
    for (int p = 0; p < n; ++p) {
      int fib = (*fiber_of)[order[p]];
      if (slot[fib] < 0) slot[fib] = next++;
      append_int(key, slot[fib]);
    }
  }
  key += "B";
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) append_int(key, s.B.at(order[p], order[q]));
  key += "C";
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n; ++p) append_int(key, s.C.at(r, order[p]));
  return key;
}

}  // namespace

std::string canonical_seed_key(const Folding& f, const Seed& s) {
  return seed_key_impl(s, &f.vertex_map);
}

std::string canonical_seed_key_unrestricted(const Seed& s) {
  return seed_key_impl(s, nullptr);
}

std::vector<int> match_columns(const Seed& a, const Seed& b) {
  int n = a.B.rows();
  std::vector<int> pi(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool eq = true;
      for (int r = 0; r < n && eq; ++r)
        if (a.C.at(r, i) != b.C.at(r, j)) eq = false;
      if (eq) { pi[i] = j; break; }
    }
    if (pi[i] < 0) throw std::invalid_argument("match_columns: no c-vector match");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.B.at(i, j) != b.B.at(pi[i], pi[j]))
        throw std::invalid_argument("match_columns: exchange matrices disagree");
  return pi;
}

// ---------------------------------------------------------------------------

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::I: return "I";
    case Pattern::II: return "II";
    case Pattern::III: return "III";
    case Pattern::IV: return "IV";
  }
  return "?";
}

namespace {

// all simple directed cycles, each reported once starting at its smallest
// vertex, in arrow order
std::vector<std::vector<int>> directed_cycles(const WeightedQuiver& q) {
  std::vector<std::vector<int>> out;
  int n = q.n;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (int w = 0; w < n; ++w) {
      if (!q.arrow(v, w)) continue;
      if (w == start && path.size() >= 3) out.push_back(path);
      if (w <= start || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(start, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int v = 0; v < n; ++v) {
    path = {v};
    std::fill(used.begin(), used.end(), 0);
    used[v] = 1;
    dfs(v, v);
  }
  return out;
}

bool is_chordless(const WeightedQuiver& q, const std::vector<int>& cyc) {
  int l = (int)cyc.size();
  for (int p = 0; p < l; ++p)
    for (int s = p + 1; s < l; ++s) {
      bool adjacent = (s == p + 1) || (p == 0 && s == l - 1);
      if (adjacent) continue;
      if (q.weight_between(cyc[p], cyc[s]) != 2) return false;
    }
  return true;
}

std::vector<int> rotate_to(const std::vector<int>& cyc, int pos) {
  std::vector<int> out;
  for (size_t k = 0; k < cyc.size(); ++k)
    out.push_back(cyc[(pos + k) % cyc.size()]);
  return out;
}

}  // namespace

std::vector<PotentialTerm> chordless_cycles(const WeightedQuiver& q) {
  std::vector<PotentialTerm> out;
  for (auto& cyc : directed_cycles(q)) {
    if (!is_chordless(q, cyc)) continue;
    int l = (int)cyc.size();
    std::vector<int> w(l);
    for (int p = 0; p < l; ++p) w[p] = q.arrow(cyc[p], cyc[(p + 1) % l]);
    bool all3 = std::all_of(w.begin(), w.end(), [](int x) { return x == 3; });
    bool all5 = std::all_of(w.begin(), w.end(), [](int x) { return x == 5; });
    if (all3) {
      int mn = (int)(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
      out.push_back({rotate_to(cyc, mn), Pattern::I});
      continue;
    }
    if (l == 3 && all5) {
      int mn = (int)(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
      out.push_back({rotate_to(cyc, mn), Pattern::IV});
      continue;
    }
    if (l == 3) {
      // two weight-m arrows through one vertex, opposite arrow weight 3
      std::vector<int> ws = w;
      std::sort(ws.begin(), ws.end());
      int m = ws[2];
      if (ws[0] == 3 && ws[1] == m && (m == 4 || m == 5)) {
        // the joint vertex is the one not on the weight-3 arrow
        int p3 = (int)(std::find(w.begin(), w.end(), 3) - w.begin());
        int joint = (p3 + 2) % 3;
        if (w[joint] == m && w[(joint + 2) % 3] == m) {
          out.push_back({rotate_to(cyc, joint), Pattern::II});
          continue;
        }
      }
    }
    if (l == 4) {
      for (int m : {4, 5}) {
        // labeling 1->2 w3, 2->3 w m, 3->4 w3, 4->1 w m
        std::vector<int> starts;
        for (int p = 0; p < 4; ++p)
          if (w[p] == 3 && w[(p + 1) % 4] == m && w[(p + 2) % 4] == 3 &&
              w[(p + 3) % 4] == m)
            starts.push_back(p);
        if (!starts.empty()) {
          int best = starts[0];
          for (int p : starts)
            if (cyc[p] < cyc[best]) best = p;
          out.push_back({rotate_to(cyc, best), Pattern::III});
          goto next_cycle;
        }
      }
    }
    {
      std::string msg = "chordless_cycles: unclassifiable cycle";
      for (int v : cyc) msg += " " + std::to_string(v + 1);
      throw fold_error(msg);
    }
  next_cycle:;
  }
  return out;
}

WeightedQuiver quiver_of_matrix(const IntMatrix& B) {
  WeightedQuiver q(B.rows());
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      if (B.at(i, j) == 0) continue;
      if (B.at(i, j) > 1 || B.at(i, j) < -1)
        throw fold_error("quiver_of_matrix: entry outside {0,+-1}");
      if (B.at(i, j) > 0) q.set_arrow(i, j, 3);
    }
  return q;
}

nlohmann::ordered_json seed_to_json(const Seed& s) {
  nlohmann::ordered_json j;
  auto dump = [](const IntMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k));
      rows.push_back(row);
    }
    return rows;
  };
  j["B"] = dump(s.B);
  j["C"] = dump(s.C);
  return j;
}

}  // namespace cxb
