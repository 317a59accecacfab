#include "cxb/intmatrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace cxb {

namespace {

// Classic elimination with smallest-pivot selection. Matrices here come from
// polygon-complex boundary maps (sparse, entries +-1), so fill-in stays tame.
class SmithWorker {
 public:
  SmithWorker(const IntMatrix& m) : r_(m.rows()), c_(m.cols()), a_(r_ * c_) {
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) e(i, j) = (long)m.at(i, j);
  }

  std::vector<mpz_class> run() {
    int t = 0;
    int n = std::min(r_, c_);
    for (; t < n; ++t) {
      if (!move_pivot(t)) break;
      while (true) {
        clear_cross(t);
        int oi = -1;
        for (int i = t + 1; i < r_ && oi < 0; ++i)
          for (int j = t + 1; j < c_; ++j)
            if (e(i, j) % e(t, t) != 0) { oi = i; break; }
        if (oi < 0) break;
        // fold the offending row in so the next gcd pass shrinks the pivot
        for (int k = t; k < c_; ++k) e(t, k) += e(oi, k);
      }
    }
    std::vector<mpz_class> diag(n, 0);
    for (int i = 0; i < t && i < n; ++i) diag[i] = abs(e(i, i));
    return diag;
  }

  // gcd-style clearing of row t and column t below/right of the pivot
  void clear_cross(int t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < r_; ++i) {
        if (e(i, t) == 0) continue;
        mpz_class q = e(i, t) / e(t, t);
        for (int j = t; j < c_; ++j) e(i, j) -= q * e(t, j);
        if (e(i, t) != 0) {  // remainder smaller than pivot: promote it
          for (int j = t; j < c_; ++j) std::swap(e(i, j), e(t, j));
          dirty = true;
        }
      }
      for (int j = t + 1; j < c_; ++j) {
        if (e(t, j) == 0) continue;
        mpz_class q = e(t, j) / e(t, t);
        for (int i = t; i < r_; ++i) e(i, j) -= q * e(i, t);
        if (e(t, j) != 0) {
          for (int i = t; i < r_; ++i) std::swap(e(i, j), e(i, t));
          dirty = true;
        }
      }
    }
  }

 private:
  mpz_class& e(int i, int j) { return a_[(size_t)i * c_ + j]; }

  bool move_pivot(int t) {
    int bi = -1, bj = -1;
    mpz_class best = 0;
    for (int i = t; i < r_; ++i)
      for (int j = t; j < c_; ++j) {
        if (e(i, j) == 0) continue;
        mpz_class v = abs(e(i, j));
        if (bi < 0 || v < best) { best = v; bi = i; bj = j; }
      }
    if (bi < 0) return false;
    if (bi != t)
      for (int j = 0; j < c_; ++j) std::swap(e(bi, j), e(t, j));
    if (bj != t)
      for (int i = 0; i < r_; ++i) std::swap(e(i, bj), e(i, t));
    return true;
  }

  int r_, c_;
  std::vector<mpz_class> a_;
};

}  // namespace

IntMatrix smith_normal_form(const IntMatrix& m) {
  auto diag = smith_diagonal(m);
  IntMatrix out(m.rows(), m.cols());
  for (size_t i = 0; i < diag.size(); ++i) out.at((int)i, (int)i) = diag[i];
  return out;
}

std::vector<long long> smith_diagonal(const IntMatrix& m) {
  SmithWorker w(m);
  auto diag = w.run();
  std::vector<long long> out;
  out.reserve(diag.size());
  for (auto& d : diag) {
    if (!d.fits_slong_p())
      throw std::overflow_error("smith_diagonal: invariant factor exceeds int64");
    out.push_back(d.get_si());
  }
  return out;
}

}  // namespace cxb
