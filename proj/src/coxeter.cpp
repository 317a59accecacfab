#include "cxb/coxeter.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace cxb {

void CoxeterGraph::set_weight(int i, int j, int w) {
  if (i == j || i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw std::invalid_argument("CoxeterGraph: bad vertex pair");
  if (w < 2) throw std::invalid_argument("CoxeterGraph: weight must be >= 2");
  m_[i * rank_ + j] = w;
  m_[j * rank_ + i] = w;
}

std::vector<std::array<int, 3>> CoxeterGraph::edges() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (weight(i, j) >= 3) out.push_back({i, j, weight(i, j)});
  return out;
}

std::vector<int> CoxeterGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank_; ++j)
    if (j != i && weight(i, j) >= 3) out.push_back(j);
  return out;
}

bool CoxeterGraph::connected() const {
  if (rank_ == 0) return false;
  std::vector<char> seen(rank_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v))
      if (!seen[u]) { seen[u] = 1; ++cnt; stack.push_back(u); }
  }
  return cnt == rank_;
}

bool CoxeterGraph::simply_laced() const {
  for (auto [i, j, m] : edges())
    if (m != 3) return false;
  return true;
}

// ---------------------------------------------------------------------------
// classification

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

TypeInfo make_type(char fam, int rank, int m2) {
  TypeInfo t;
  t.family = fam;
  t.rank = rank;
  t.m = m2;
  switch (fam) {
    case 'A':
      t.order = factorial(rank + 1);
      t.coxeter_number = rank + 1;
      t.label = "A" + std::to_string(rank);
      break;
    case 'B':
      t.order = factorial(rank) << rank;
      t.coxeter_number = 2 * rank;
      t.label = "B" + std::to_string(rank);
      break;
    case 'D':
      t.order = factorial(rank) << (rank - 1);
      t.coxeter_number = 2 * rank - 2;
      t.label = "D" + std::to_string(rank);
      break;
    case 'E':
      t.order = rank == 6 ? 51840LL : rank == 7 ? 2903040LL : 696729600LL;
      t.coxeter_number = rank == 6 ? 12 : rank == 7 ? 18 : 30;
      t.label = "E" + std::to_string(rank);
      break;
    case 'F':
      t.order = 1152;
      t.coxeter_number = 12;
      t.label = "F4";
      break;
    case 'G':
      t.order = 12;
      t.coxeter_number = 6;
      t.label = "G2";
      break;
    case 'H':
      t.order = rank == 2 ? 10 : rank == 3 ? 120 : 14400;
      t.coxeter_number = rank == 2 ? 5 : rank == 3 ? 10 : 30;
      t.label = "H" + std::to_string(rank);
      break;
    case 'I':
      t.order = 2LL * m2;
      t.coxeter_number = m2;
      t.label = "I2(" + std::to_string(m2) + ")";
      break;
  }
  if (fam == 'A' && rank == 2) t.m = 3;
  if (fam == 'B' && rank == 2) t.m = 4;
  if (fam == 'G') t.m = 6;
  if (fam == 'H' && rank == 2) t.m = 5;
  return t;
}

TypeInfo not_finite() {
  TypeInfo t;
  t.label = "not finite";
  return t;
}

// arms of a tree seen from a branch vertex: lengths in edges, sorted
std::vector<int> arm_lengths(const CoxeterGraph& g, int branch) {
  std::vector<int> arms;
  for (int s : g.neighbors(branch)) {
    int len = 1, prev = branch, cur = s;
    while (true) {
      auto nb = g.neighbors(cur);
      nb.erase(std::remove(nb.begin(), nb.end(), prev), nb.end());
      if (nb.size() != 1) break;  // end of arm or another branch
      prev = cur;
      cur = nb[0];
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace

TypeInfo classify_finite(const CoxeterGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("classify_finite: graph must be connected");
  int n = g.rank();
  if (n == 1) return make_type('A', 1, 0);
  auto edges = g.edges();
  if ((int)edges.size() > n - 1) return not_finite();  // has a cycle
  if ((int)edges.size() < n - 1) return not_finite();  // disconnected (guarded)

  if (n == 2) {
    int m = edges[0][2];
    if (m == 3) return make_type('A', 2, 3);
    if (m == 4) return make_type('B', 2, 4);
    if (m == 5) return make_type('H', 2, 5);
    if (m == 6) return make_type('G', 2, 6);
    return make_type('I', 2, m);
  }

  int maxdeg = 0, branch = -1, branches = 0;
  for (int i = 0; i < n; ++i) {
    int d = (int)g.neighbors(i).size();
    maxdeg = std::max(maxdeg, d);
    if (d >= 3) { branch = i; ++branches; }
  }
  if (maxdeg > 3 || branches > 1) return not_finite();

  std::vector<std::array<int, 3>> heavy;
  for (auto& e : edges)
    if (e[2] > 3) heavy.push_back(e);
  if (heavy.size() > 1) return not_finite();

  if (branches == 1) {
    if (!heavy.empty()) return not_finite();
    auto arms = arm_lengths(g, branch);
    if (arms[0] == 1 && arms[1] == 1) return make_type('D', n, 0);
    if (arms == std::vector<int>{1, 2, 2}) return make_type('E', 6, 0);
    if (arms == std::vector<int>{1, 2, 3}) return make_type('E', 7, 0);
    if (arms == std::vector<int>{1, 2, 4}) return make_type('E', 8, 0);
    return not_finite();
  }

  // path
  if (heavy.empty()) return make_type('A', n, 0);
  int w = heavy[0][2];
  int a = heavy[0][0], b = heavy[0][1];
  bool terminal = g.neighbors(a).size() == 1 || g.neighbors(b).size() == 1;
  if (w == 4) {
    if (terminal) return make_type('B', n, 0);
    if (n == 4) {
      // weight-4 edge must be the middle edge of the path
      if (g.neighbors(a).size() == 2 && g.neighbors(b).size() == 2)
        return make_type('F', 4, 0);
    }
    return not_finite();
  }
  if (w == 5 && terminal && n <= 4) {
    // the weight-5 end must hang off a path end: H3, H4
    return make_type('H', n, 0);
  }
  return not_finite();
}

CoxeterGraph standard_graph(const std::string& label) {
  TypeInfo t = type_by_label(label);
  int n = t.rank;
  CoxeterGraph g(n);
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) g.set_weight(i, i + 1, 3);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) g.set_weight(i, i + 1, 3);
      g.set_weight(n - 2, n - 1, 4);
      break;
    case 'D':
      g.set_weight(0, 2, 3);
      g.set_weight(1, 2, 3);
      for (int i = 2; i + 1 < n; ++i) g.set_weight(i, i + 1, 3);
      break;
    case 'E':
      // path 1-2-3-5-6(-7-8) with 4 attached to 3; zero-based here
      g.set_weight(0, 1, 3);
      g.set_weight(1, 2, 3);
      g.set_weight(2, 3, 3);
      g.set_weight(2, 4, 3);
      for (int i = 4; i + 1 < n; ++i) g.set_weight(i, i + 1, 3);
      break;
    case 'F':
      g.set_weight(0, 1, 3);
      g.set_weight(1, 2, 4);
      g.set_weight(2, 3, 3);
      break;
    case 'G':
      g.set_weight(0, 1, 6);
      break;
    case 'H':
      g.set_weight(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) g.set_weight(i, i + 1, 3);
      break;
    case 'I':
      g.set_weight(0, 1, t.m);
      break;
    default:
      throw std::invalid_argument("standard_graph: unknown label " + label);
  }
  return g;
}

TypeInfo type_by_label(const std::string& label) {
  std::string s = label;
  // accept I2:m and I2(m)
  if (s.size() >= 3 && (s[0] == 'I' || s[0] == 'i') && s[1] == '2') {
    std::string num;
    for (char c : s.substr(2))
      if (std::isdigit((unsigned char)c)) num += c;
    if (num.empty()) throw std::invalid_argument("bad I2 label: " + label);
    int m = std::stoi(num);
    if (m < 3) throw std::invalid_argument("I2(m) needs m >= 3");
    if (m == 3) return make_type('A', 2, 3);
    if (m == 4) return make_type('B', 2, 4);
    if (m == 5) return make_type('H', 2, 5);
    if (m == 6) return make_type('G', 2, 6);
    return make_type('I', 2, m);
  }
  if (s.size() < 2) throw std::invalid_argument("bad type label: " + label);
  char fam = (char)std::toupper((unsigned char)s[0]);
  int rank = std::stoi(s.substr(1));
  auto require = [&](bool ok) {
    if (!ok) throw std::invalid_argument("bad type label: " + label);
  };
  switch (fam) {
    case 'A': require(rank >= 1); break;
    case 'B': case 'C': fam = 'B'; require(rank >= 2); break;
    case 'D': require(rank >= 4); break;
    case 'E': require(rank >= 6 && rank <= 8); break;
    case 'F': require(rank == 4); break;
    case 'G': require(rank == 2); break;
    case 'H': require(rank >= 2 && rank <= 4); break;
    default: require(false);
  }
  return make_type(fam, rank, 0);
}

// ---------------------------------------------------------------------------
// CMatrix / GroupElement

size_t CMatrix::hash() const {
  size_t h = 14695981039346656037ull;
  for (const auto& x : a) h = (h ^ x.hash()) * 1099511628211ull;
  return h;
}

CoxeterContext::CoxeterContext(const CoxeterGraph& g, size_t word_cap)
    : graph_(g), word_cap_(word_cap) {
  type_ = classify_finite(g);
  if (!type_.finite())
    throw std::invalid_argument("CoxeterContext: graph is not of finite type");
  int n = g.rank();

  // scalar level: lcm of the weights that contribute an irrational
  // 2cos(pi/m); weights 2 and 3 embed rationally at any level
  long long level = 3;
  for (auto [i, j, m] : g.edges())
    if (m > 3) level = std::lcm(level == 3 ? 1 : level, (long long)m);
  lvl_ = CycloLevel::get((int)level);

  edge_coeff_.assign((size_t)n * n, CycloReal());
  adj_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int m = g.weight(i, j);
      if (m >= 3) {
        edge_coeff_[(size_t)i * n + j] = CycloReal::weight(lvl_, m);
        adj_[i].push_back(j);
      }
    }

  // positive roots: closure of the simple roots under the generators
  auto key_of = [](const std::vector<CycloReal>& v) {
    size_t h = 1469598103934665603ull;
    for (const auto& x : v) h = (h ^ x.hash()) * 1099511628211ull;
    return h;
  };
  std::unordered_map<size_t, std::vector<int>> seen;
  auto lookup = [&](const std::vector<CycloReal>& v) -> bool {
    auto it = seen.find(key_of(v));
    if (it == seen.end()) return false;
    for (int idx : it->second)
      if (pos_roots_[idx] == v) return true;
    return false;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<CycloReal> e(n);
    e[i] = CycloReal::from_rational(lvl_, Rational(1));
    seen[key_of(e)].push_back((int)pos_roots_.size());
    pos_roots_.push_back(std::move(e));
  }
  std::vector<CMatrix> sig(n, CMatrix(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k)
      sig[i].at(k, k) = CycloReal::from_rational(lvl_, Rational(1));
    sig[i].at(i, i) = CycloReal::from_rational(lvl_, Rational(-1));
    for (int j : adj_[i]) sig[i].at(i, j) = edge_coeff_[(size_t)i * n + j];
  }
  for (size_t head = 0; head < pos_roots_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      std::vector<CycloReal> img = apply(sig[i], pos_roots_[head]);
      if (root_sign(img) < 0) continue;
      if (!lookup(img)) {
        seen[key_of(img)].push_back((int)pos_roots_.size());
        pos_roots_.push_back(std::move(img));
      }
    }
    if (pos_roots_.size() > 100000)
      throw resource_error("CoxeterContext: root system too large");
  }

  // longest element by greedy ascent
  w0_ = identity();
  while (true) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      std::vector<CycloReal> col(n);
      for (int k = 0; k < n; ++k) col[k] = w0_.mat.at(k, i);
      if (root_sign(col) > 0) { pick = i; break; }
    }
    if (pick < 0) break;
    rmul_gen(w0_, pick);
    w0_word_.push_back(pick);
  }
  if (w0_.len != (int)pos_roots_.size())
    throw std::logic_error("CoxeterContext: longest element length mismatch");

  // diagram automorphism: w0(alpha_i) = -alpha_tau(i)
  tau_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool match = true;
      for (int k = 0; k < n && match; ++k) {
        CycloReal want = k == j ? -pos_roots_[j][k] : CycloReal();
        if (!(w0_.mat.at(k, i) == want)) match = false;
      }
      if (match) { tau_[i] = j; break; }
    }
    if (tau_[i] < 0)
      throw std::logic_error("CoxeterContext: w0 does not permute simple roots");
  }
}

int CoxeterContext::root_sign(const std::vector<CycloReal>& v) const {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    return x.sign();
  }
  return 0;
}

std::vector<CycloReal> CoxeterContext::apply(
    const CMatrix& m, const std::vector<CycloReal>& v) const {
  std::vector<CycloReal> out(m.n);
  for (int i = 0; i < m.n; ++i) {
    CycloReal acc;
    for (int j = 0; j < m.n; ++j) {
      if (v[j].is_zero() || m.at(i, j).is_zero()) continue;
      acc.addmul(m.at(i, j), v[j]);
    }
    out[i] = std::move(acc);
  }
  return out;
}

GroupElement CoxeterContext::identity() const {
  int n = rank();
  GroupElement g;
  g.mat = CMatrix(n);
  for (int i = 0; i < n; ++i)
    g.mat.at(i, i) = CycloReal::from_rational(lvl_, Rational(1));
  g.inv = g.mat;
  g.len = 0;
  g.ldesc = g.rdesc = 0;
  return g;
}

GroupElement CoxeterContext::generator(int i) const {
  GroupElement g = identity();
  rmul_gen(g, i);
  return g;
}

void CoxeterContext::rmul_gen(GroupElement& g, int i) const {
  int n = rank();
  // sign of column i of mat decides the length change
  std::vector<CycloReal> col(n);
  for (int k = 0; k < n; ++k) col[k] = g.mat.at(k, i);
  int delta = root_sign(col) > 0 ? 1 : -1;
  // mat <- mat * sigma_i : col_j += c_ij col_i (j ~ i), col_i negated
  for (int j : adj_[i]) {
    const CycloReal& c = edge_coeff_[(size_t)i * n + j];
    for (int k = 0; k < n; ++k) {
      if (col[k].is_zero()) continue;
      g.mat.at(k, j).addmul(c, col[k]);
    }
  }
  for (int k = 0; k < n; ++k) g.mat.at(k, i) = -col[k];
  // inv <- sigma_i * inv : row_i <- -row_i + sum c_ij row_j
  std::vector<CycloReal> row(n);
  for (int k = 0; k < n; ++k) row[k] = -g.inv.at(i, k);
  for (int j : adj_[i]) {
    const CycloReal& c = edge_coeff_[(size_t)i * n + j];
    for (int k = 0; k < n; ++k) row[k].addmul(c, g.inv.at(j, k));
  }
  for (int k = 0; k < n; ++k) g.inv.at(i, k) = std::move(row[k]);
  g.len += delta;
  g.ldesc = g.rdesc = -1;
}

void CoxeterContext::lmul_gen(GroupElement& g, int i) const {
  int n = rank();
  std::vector<CycloReal> icol(n);
  for (int k = 0; k < n; ++k) icol[k] = g.inv.at(k, i);
  int delta = root_sign(icol) > 0 ? 1 : -1;
  // inv <- inv * sigma_i
  for (int j : adj_[i]) {
    const CycloReal& c = edge_coeff_[(size_t)i * n + j];
    for (int k = 0; k < n; ++k) {
      if (icol[k].is_zero()) continue;
      g.inv.at(k, j).addmul(c, icol[k]);
    }
  }
  for (int k = 0; k < n; ++k) g.inv.at(k, i) = -icol[k];
  // mat <- sigma_i * mat
  std::vector<CycloReal> row(n);
  for (int k = 0; k < n; ++k) row[k] = -g.mat.at(i, k);
  for (int j : adj_[i]) {
    const CycloReal& c = edge_coeff_[(size_t)i * n + j];
    for (int k = 0; k < n; ++k) row[k].addmul(c, g.mat.at(j, k));
  }
  for (int k = 0; k < n; ++k) g.mat.at(i, k) = std::move(row[k]);
  g.len += delta;
  g.ldesc = g.rdesc = -1;
}

GroupElement CoxeterContext::mult(const GroupElement& a,
                                  const GroupElement& b) const {
  int n = rank();
  if (a.mat.n != n || b.mat.n != n)
    throw std::invalid_argument("mult: elements from another context");
  GroupElement out;
  out.mat = CMatrix(n);
  out.inv = CMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycloReal acc, iacc;
      for (int k = 0; k < n; ++k) {
        if (!a.mat.at(i, k).is_zero() && !b.mat.at(k, j).is_zero())
          acc.addmul(a.mat.at(i, k), b.mat.at(k, j));
        if (!b.inv.at(i, k).is_zero() && !a.inv.at(k, j).is_zero())
          iacc.addmul(b.inv.at(i, k), a.inv.at(k, j));
      }
      out.mat.at(i, j) = acc;
      out.inv.at(i, j) = iacc;
    }
  out.len = length_from_matrix(out.mat);
  return out;
}

GroupElement CoxeterContext::inverse(const GroupElement& g) const {
  GroupElement out;
  out.mat = g.inv;
  out.inv = g.mat;
  out.len = g.len;
  out.ldesc = g.rdesc;
  out.rdesc = g.ldesc;
  return out;
}

GroupElement CoxeterContext::conj_by_w0(const GroupElement& g) const {
  return mult(mult(w0_, g), w0_);
}

int CoxeterContext::left_descents(const GroupElement& g) const {
  if (g.ldesc >= 0) return g.ldesc;
  int n = rank(), mask = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<CycloReal> col(n);
    for (int k = 0; k < n; ++k) col[k] = g.inv.at(k, i);
    if (root_sign(col) < 0) mask |= 1 << i;
  }
  g.ldesc = mask;
  return mask;
}

int CoxeterContext::right_descents(const GroupElement& g) const {
  if (g.rdesc >= 0) return g.rdesc;
  int n = rank(), mask = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<CycloReal> col(n);
    for (int k = 0; k < n; ++k) col[k] = g.mat.at(k, i);
    if (root_sign(col) < 0) mask |= 1 << i;
  }
  g.rdesc = mask;
  return mask;
}

int CoxeterContext::length_from_matrix(const CMatrix& m) const {
  int flips = 0;
  for (const auto& r : pos_roots_)
    if (root_sign(apply(m, r)) < 0) ++flips;
  return flips;
}

std::vector<int> CoxeterContext::reduced_word(GroupElement g) const {
  std::vector<int> word;
  while (g.len > 0) {
    int ld = left_descents(g);
    int i = __builtin_ctz(ld);
    lmul_gen(g, i);
    word.push_back(i);
  }
  return word;
}

GroupElement CoxeterContext::eval_word(const std::vector<int>& word) const {
  GroupElement g = identity();
  for (int letter : word) {
    int i = std::abs(letter) - 1;
    if (i < 0 || i >= rank())
      throw std::invalid_argument("eval_word: letter out of range");
    rmul_gen(g, i);
  }
  return g;
}

EnumeratedGroup enumerate_group(const CoxeterContext& ctx, long long bound) {
  if (ctx.type().order > bound)
    throw resource_error("enumerate_group: group order " +
                         std::to_string(ctx.type().order) +
                         " exceeds bound " + std::to_string(bound));
  EnumeratedGroup out;
  std::unordered_map<size_t, std::vector<int>> seen;
  auto find = [&](const GroupElement& g) -> bool {
    auto it = seen.find(g.hash());
    if (it == seen.end()) return false;
    for (int idx : it->second)
      if (out.elements[idx] == g) return true;
    return false;
  };
  out.elements.push_back(ctx.identity());
  out.words.push_back({});
  seen[out.elements[0].hash()].push_back(0);
  for (size_t head = 0; head < out.elements.size(); ++head) {
    for (int i = 0; i < ctx.rank(); ++i) {
      GroupElement next = out.elements[head];
      ctx.rmul_gen(next, i);
      if (next.len < out.elements[head].len) continue;  // BFS by length
      if (find(next)) continue;
      seen[next.hash()].push_back((int)out.elements.size());
      auto w = out.words[head];
      w.push_back(i);
      out.elements.push_back(std::move(next));
      out.words.push_back(std::move(w));
      if ((long long)out.elements.size() > bound)
        throw resource_error("enumerate_group: bound exceeded");
    }
  }
  if ((long long)out.elements.size() != ctx.type().order)
    throw std::logic_error("enumerate_group: size does not match group order");
  return out;
}

}  // namespace cxb
