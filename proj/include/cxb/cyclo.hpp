#pragma once

#include <boost/container/small_vector.hpp>
#include <memory>
#include <vector>

#include "cxb/rational.hpp"

namespace cxb {

// coefficients stay inline for the quadratic fields that dominate the
// computations (simply laced contexts are degree one)
using CoeffVec = boost::container::small_vector<Rational, 2>;

// Monic minimal polynomial of theta_L = 2cos(pi/L) over Q, as a coefficient
// vector c[0] + c[1] x + ... + x^deg. Degree is phi(2L)/2 for L >= 2.
std::vector<long long> minimal_polynomial(int level);

// Cyclotomic polynomial Phi_n, integer coefficients, ascending.
std::vector<long long> cyclotomic_polynomial(int n);

// Shared per-level data: the minimal polynomial, reduction tables for powers
// x^deg .. x^(2deg-2), embeddings of smaller 2cos(pi/m), and a refinable
// rational enclosure of theta_L used for exact sign determination.
class CycloLevel {
 public:
  static const CycloLevel* get(int level);  // cached, thread-safe

  int level() const { return level_; }
  int degree() const { return degree_; }
  const std::vector<long long>& min_poly() const { return mu_; }

  // coefficient vector of 2cos(pi/m) in the power basis of theta_L;
  // requires m == 2 or m == 3 or L % m == 0.
  CoeffVec embed_weight(int m) const;

  // exact sign of sum_i coeffs[i] * theta_L^i (coeffs reduced, size degree_)
  int sign(const CoeffVec& coeffs) const;

  // reduce an arbitrary-degree polynomial modulo mu, result has size degree_
  CoeffVec reduce(CoeffVec p) const;

  ~CycloLevel();

 private:
  explicit CycloLevel(int level);
  struct Enclosure;  // mpq interval around theta_L, refined on demand

  int level_;
  int degree_;
  std::vector<long long> mu_;
  // xpow_[k] = x^(degree_+k) mod mu, k = 0..degree_-2
  std::vector<CoeffVec> xpow_;
  std::unique_ptr<Enclosure> enc_;
};

// Element of Z[2cos(pi/L)] with rational coefficients, reduced mod mu_L.
// Immutable value semantics; arithmetic requires matching levels.
class CycloReal {
 public:
  CycloReal() : lvl_(nullptr) {}  // usable as 0 at any level
  explicit CycloReal(const CycloLevel* lvl) : lvl_(lvl), c_(lvl->degree()) {}
  CycloReal(const CycloLevel* lvl, CoeffVec coeffs);

  static CycloReal from_rational(const CycloLevel* lvl, const Rational& r);
  static CycloReal theta(const CycloLevel* lvl);          // 2cos(pi/L)
  static CycloReal weight(const CycloLevel* lvl, int m);  // 2cos(pi/m)

  const CycloLevel* level() const { return lvl_; }
  const CoeffVec& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  int sign() const;
  double approx() const;

  friend CycloReal operator+(const CycloReal& a, const CycloReal& b);
  friend CycloReal operator-(const CycloReal& a, const CycloReal& b);
  friend CycloReal operator*(const CycloReal& a, const CycloReal& b);
  CycloReal operator-() const;
  CycloReal& operator+=(const CycloReal& o);
  CycloReal& operator-=(const CycloReal& o);
  CycloReal& operator*=(const CycloReal& o) { return *this = *this * o; }
  // *this += a * b without temporaries
  void addmul(const CycloReal& a, const CycloReal& b);

  friend bool operator==(const CycloReal& a, const CycloReal& b);
  friend bool operator!=(const CycloReal& a, const CycloReal& b) { return !(a == b); }

  size_t hash() const;
  std::string str() const;

 private:
  static const CycloLevel* common_level(const CycloReal& a, const CycloReal& b);
  const CycloLevel* lvl_;   // nullptr encodes a levelless exact zero
  CoeffVec c_;
};

}  // namespace cxb
