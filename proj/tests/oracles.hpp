#pragma once

// Independent reference computations used only by tests. These deliberately
// avoid the library's own code paths wherever they check one.

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using QPoly = std::vector<mpq_class>;  // ascending coefficients

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qp_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * (long)i);
  qp_trim(d);
  return d;
}

// remainder of a by b, b nonzero
inline QPoly qp_rem(QPoly a, const QPoly& b) {
  qp_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    qp_trim(a);
  }
  return a;
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QPoly r = qp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline QPoly qp_div_exact(QPoly a, const QPoly& b) {
  qp_trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    qp_trim(a);
  }
  if (!a.empty()) throw std::logic_error("qp_div_exact: remainder");
  return q;
}

// determinant by fraction-free-ish Gaussian elimination over mpq
inline mpq_class qdet(std::vector<std::vector<mpq_class>> m) {
  size_t n = m.size();
  mpq_class det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) { std::swap(m[p], m[c]); det = -det; }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// cyclotomic polynomial over mpz, ascending
inline std::vector<mpz_class> cyclotomic(int n) {
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto den = cyclotomic(d);
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (int k = (int)q.size() - 1; k >= 0; --k) {
      mpz_class c = num[k + den.size() - 1] / den.back();
      q[k] = c;
      for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    num = std::move(q);
  }
  return num;
}

// Minimal polynomial of 2cos(pi/L) by resultant elimination:
// Res_y(Phi_2L(y), y^2 - x y + 1) = c * mu(x)^2; take the squarefree part
// and normalize monic. Resultant evaluated pointwise via Sylvester
// determinants and interpolated.
inline QPoly rescos_min_poly(int L) {
  if (L == 1) return {2, 1};
  auto phi = cyclotomic(2 * L);
  int D = (int)phi.size() - 1;
  // sample at x = 0..D
  std::vector<mpq_class> xs, ys;
  for (int s = 0; s <= D; ++s) {
    size_t n = D + 2;
    std::vector<std::vector<mpq_class>> syl(n, std::vector<mpq_class>(n, 0));
    for (int r = 0; r < 2; ++r)
      for (int i = 0; i <= D; ++i) syl[r][r + i] = mpq_class(phi[D - i]);
    // g = y^2 - s y + 1
    for (int r = 0; r < D; ++r) {
      syl[2 + r][r] = 1;
      syl[2 + r][r + 1] = -s;
      syl[2 + r][r + 2] = 1;
    }
    xs.push_back(s);
    ys.push_back(qdet(std::move(syl)));
  }
  // Lagrange interpolation
  QPoly res = {0};
  for (int i = 0; i <= D; ++i) {
    QPoly term = {1};
    mpq_class denom = 1;
    for (int j = 0; j <= D; ++j) {
      if (j == i) continue;
      // term *= (x - xs[j])
      QPoly nt(term.size() + 1, 0);
      for (size_t k = 0; k < term.size(); ++k) {
        nt[k + 1] += term[k];
        nt[k] -= term[k] * xs[j];
      }
      term = std::move(nt);
      denom *= xs[i] - xs[j];
    }
    mpq_class scale = ys[i] / denom;
    if (res.size() < term.size()) res.resize(term.size(), 0);
    for (size_t k = 0; k < term.size(); ++k) res[k] += term[k] * scale;
  }
  qp_trim(res);
  QPoly sq = qp_div_exact(res, qp_gcd(res, qp_derivative(res)));
  mpq_class lead = sq.back();
  for (auto& c : sq) c /= lead;
  return sq;
}

// number of clusters from the exponents and Coxeter number
inline long long cluster_count(const std::string& label) {
  static const std::map<std::string, std::pair<std::vector<int>, int>> table = {
      {"A1", {{1}, 2}},
      {"A2", {{1, 2}, 3}},
      {"A3", {{1, 2, 3}, 4}},
      {"A4", {{1, 2, 3, 4}, 5}},
      {"A5", {{1, 2, 3, 4, 5}, 6}},
      {"B5", {{1, 3, 5, 7, 9}, 10}},
      {"B2", {{1, 3}, 4}},
      {"B3", {{1, 3, 5}, 6}},
      {"B4", {{1, 3, 5, 7}, 8}},
      {"D4", {{1, 3, 5, 3}, 6}},
      {"F4", {{1, 5, 7, 11}, 12}},
      {"G2", {{1, 5}, 6}},
      {"H2", {{1, 4}, 5}},
      {"H3", {{1, 5, 9}, 10}},
      {"H4", {{1, 11, 19, 29}, 30}},
  };
  std::vector<int> exps;
  int h;
  if (label.substr(0, 2) == "I2") {
    std::string num;
    for (size_t i = 2; i < label.size(); ++i)
      if (isdigit((unsigned char)label[i])) num += label[i];
    int m = std::stoi(num);
    exps = {1, m - 1};
    h = m;
  } else {
    auto it = table.find(label);
    if (it == table.end()) throw std::invalid_argument("cluster_count: " + label);
    exps = it->second.first;
    h = it->second.second;
  }
  long long num = 1, den = 1;
  for (int e : exps) {
    num *= e + h + 1;
    den *= e + 1;
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw std::logic_error("cluster_count: not integral");
  return num;
}

}  // namespace oracle
