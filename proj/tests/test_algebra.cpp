#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "cxb/cyclo.hpp"
#include "cxb/intmatrix.hpp"
#include "oracles.hpp"

using namespace cxb;

TEST_CASE("minimal polynomial small cases") {
  CHECK(minimal_polynomial(3) == std::vector<long long>{-1, 1});      // x - 1
  CHECK(minimal_polynomial(4) == std::vector<long long>{-2, 0, 1});   // x^2 - 2
  CHECK(minimal_polynomial(5) == std::vector<long long>{-1, -1, 1});  // x^2 - x - 1
  CHECK(minimal_polynomial(1) == std::vector<long long>{2, 1});
  CHECK(minimal_polynomial(2) == std::vector<long long>{0, 1});
}

static int phi(int n) {
  int out = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++out;
  return out;
}

TEST_CASE("minimal polynomial matches resultant-elimination oracle, L <= 30") {
  for (int L = 1; L <= 30; ++L) {
    auto mine = minimal_polynomial(L);
    auto ref = oracle::rescos_min_poly(L);
    REQUIRE(mine.size() == ref.size());
    for (size_t i = 0; i < mine.size(); ++i)
      CHECK(mpq_class((long)mine[i]) == ref[i]);
    if (L >= 2) CHECK((int)mine.size() - 1 == phi(2 * L) / 2);
  }
}

TEST_CASE("theta is a root: |mu(2cos(pi/L))| tiny for L <= 30") {
  for (int L = 1; L <= 30; ++L) {
    auto mu = minimal_polynomial(L);
    double th = 2.0 * std::cos(M_PI / L);
    double acc = 0;
    for (int i = (int)mu.size() - 1; i >= 0; --i) acc = acc * th + (double)mu[i];
    CHECK(std::abs(acc) < 1e-6);
  }
}

TEST_CASE("ring arithmetic with reduction") {
  const CycloLevel* l5 = CycloLevel::get(5);
  CycloReal t = CycloReal::theta(l5);
  CycloReal one = CycloReal::from_rational(l5, Rational(1));
  CHECK(t * t == t + one);  // x^2 = x + 1 mod x^2-x-1
  CHECK((t * CycloReal(l5)).is_zero());

  const CycloLevel* l4 = CycloLevel::get(4);
  CycloReal s = CycloReal::theta(l4);
  CHECK(s * s == CycloReal::from_rational(l4, Rational(2)));

  CHECK_THROWS_AS(CycloReal::theta(l4) + CycloReal::theta(l5), std::invalid_argument);
}

TEST_CASE("sign of cyclotomic reals") {
  const CycloLevel* l5 = CycloLevel::get(5);
  const CycloLevel* l3 = CycloLevel::get(3);
  CycloReal one5 = CycloReal::from_rational(l5, Rational(1));
  CHECK(CycloReal(l5).sign() == 0);
  CHECK((CycloReal::theta(l5) - one5).sign() == 1);  // golden ratio - 1 > 0
  CHECK((CycloReal::from_rational(l3, Rational(1)) - CycloReal::theta(l3)).sign() == 0);
  CHECK((one5 - CycloReal::theta(l5)).sign() == -1);
}

TEST_CASE("ring axioms and sign multiplicativity on random elements") {
  std::mt19937_64 rng(7);
  for (int L : {4, 5, 7, 12}) {
    const CycloLevel* lvl = CycloLevel::get(L);
    auto rnd = [&] {
      CoeffVec c(lvl->degree());
      for (auto& x : c) x = Rational((long long)(rng() % 11) - 5);
      return CycloReal(lvl, c);
    };
    for (int it = 0; it < 200; ++it) {
      CycloReal a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero() && !b.is_zero())
        CHECK(a.sign() * b.sign() == (a * b).sign());
    }
  }
}

TEST_CASE("embedding of smaller weights") {
  const CycloLevel* l12 = CycloLevel::get(12);
  CycloReal r4 = CycloReal::weight(l12, 4);   // sqrt(2)
  CycloReal r6 = CycloReal::weight(l12, 6);   // sqrt(3)
  CycloReal two = CycloReal::from_rational(l12, Rational(2));
  CycloReal three = CycloReal::from_rational(l12, Rational(3));
  CHECK(r4 * r4 == two);
  CHECK(r6 * r6 == three);
  CHECK(CycloReal::weight(l12, 3).is_one());
  CHECK(CycloReal::weight(l12, 2).is_zero());
  CHECK(r4.sign() == 1);
}

// --------------------------------------------------------------------------

static long long gcd_of_minors(const IntMatrix& m, int k) {
  // gcd of all k x k minors, 0 if all vanish; k <= 3 here
  std::vector<int> rows(m.rows()), cols(m.cols());
  long long g = 0;
  std::vector<int> rsel, csel;
  std::function<void(int, int)> pick_cols = [&](int start, int left) {
    if (left == 0) {
      // determinant of the selected submatrix (k <= 3)
      long long d = 0;
      if (k == 1) d = m.at(rsel[0], csel[0]);
      else if (k == 2)
        d = m.at(rsel[0], csel[0]) * m.at(rsel[1], csel[1]) -
            m.at(rsel[0], csel[1]) * m.at(rsel[1], csel[0]);
      else {
        for (int p = 0; p < 3; ++p) {
          long long a = m.at(rsel[0], csel[p]);
          int q = (p + 1) % 3, r = (p + 2) % 3;
          d += a * (m.at(rsel[1], csel[q]) * m.at(rsel[2], csel[r]) -
                    m.at(rsel[1], csel[r]) * m.at(rsel[2], csel[q]));
        }
      }
      g = std::gcd(g, d < 0 ? -d : d);
      return;
    }
    for (int c = start; c <= m.cols() - left; ++c) {
      csel.push_back(c);
      pick_cols(c + 1, left - 1);
      csel.pop_back();
    }
  };
  std::function<void(int, int)> pick_rows = [&](int start, int left) {
    if (left == 0) { pick_cols(0, k); return; }
    for (int r = start; r <= m.rows() - left; ++r) {
      rsel.push_back(r);
      pick_rows(r + 1, left - 1);
      rsel.pop_back();
    }
  };
  pick_rows(0, k);
  return g;
}

TEST_CASE("smith normal form basics") {
  IntMatrix id = IntMatrix::identity(3);
  CHECK(smith_normal_form(id) == id);

  IntMatrix d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 3;
  auto s = smith_diagonal(d);
  CHECK(s == std::vector<long long>{1, 6});

  IntMatrix z(3, 2);
  CHECK(smith_diagonal(z) == std::vector<long long>{0, 0});
}

TEST_CASE("smith normal form preserves rank and minor gcds") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    int r = 1 + (int)(rng() % 3), c = 1 + (int)(rng() % 3);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = (long long)(rng() % 9) - 4;
    IntMatrix s = smith_normal_form(m);
    for (int k = 1; k <= std::min(r, c); ++k)
      CHECK(gcd_of_minors(m, k) == gcd_of_minors(s, k));
    // divisibility chain, nonnegative diagonal
    long long prev = -1;
    for (int i = 0; i < std::min(r, c); ++i) {
      long long v = s.at(i, i);
      CHECK(v >= 0);
      if (prev > 0) CHECK((v % prev) == 0);
      if (prev == 0) CHECK(v == 0);
      prev = v;
    }
  }
}
