#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cxb/garside.hpp"

using namespace cxb;

static BraidWord W(std::initializer_list<int> ls) {
  return BraidWord(std::vector<int>(ls));
}

TEST_CASE("normal form basics") {
  CoxeterContext a1(standard_graph("A1"));
  NormalForm nf = normal_form(BraidWord(), a1);
  CHECK(nf.trivial());

  nf = normal_form(W({-1}), a1);  // s^-1 = Delta^-1 in rank 1
  CHECK(nf.delta == -1);
  CHECK(nf.simples.empty());

  CoxeterContext a2(standard_graph("A2"));
  CHECK(normal_form(W({1, 2, 1}), a2) == normal_form(W({2, 1, 2}), a2));
  CHECK(normal_form(W({1, 2, 1}), a2).delta == 1);  // aba is the half twist
  CHECK(equal(W({1, 2, 1}), W({2, 1, 2}), a2));
  CHECK_FALSE(equal(W({1}), W({2}), a2));
}

TEST_CASE("defining relations in rank two") {
  CoxeterContext i25(standard_graph("I2:5"));
  CHECK(equal(W({1, 2, 1, 2, 1}), W({2, 1, 2, 1, 2}), i25));
  CHECK_FALSE(equal(W({1, 2, 1, 2}), W({2, 1, 2, 1}), i25));
}

TEST_CASE("commuting generators with no edge") {
  CoxeterContext a3(standard_graph("A3"));
  CHECK(equal(W({1, 3}), W({3, 1}), a3));
  CHECK_FALSE(equal(W({1, 2}), W({2, 1}), a3));
}

TEST_CASE("inverses and free reduction") {
  CoxeterContext b3(standard_graph("B3"));
  BraidWord w = W({1, 2, -1, 3, 2});
  BraidWord conj = w;
  conj.append_inverse(w);
  CHECK(conj.empty());  // freely reduced already
  CHECK(is_trivial(W({2, -3, 3, -2}), b3));
  CHECK(is_trivial(W({-2, 1, -1, 2}), b3));
}

TEST_CASE("delta squared is central") {
  for (std::string label : {"A2", "A3", "B3", "H3", "I2:7"}) {
    CoxeterContext ctx(standard_graph(label));
    BraidWord d2;
    for (int k = 0; k < 2; ++k)
      for (int i : ctx.longest_word()) d2.push(i + 1);
    NormalForm nf = normal_form(d2, ctx);
    CHECK(nf.delta == 2);
    CHECK(nf.simples.empty());
    for (int g = 1; g <= ctx.rank(); ++g) {
      BraidWord lhs = d2, rhs = BraidWord::gen(g);
      lhs.append(BraidWord::gen(g));
      rhs.append(d2);
      CHECK(equal(lhs, rhs, ctx));
    }
  }
}

TEST_CASE("normal form round trip through words") {
  std::mt19937_64 rng(17);
  for (std::string label : {"A3", "B3", "H3", "I2:8"}) {
    CoxeterContext ctx(standard_graph(label));
    for (int it = 0; it < 40; ++it) {
      BraidWord w;
      int len = 1 + (int)(rng() % 24);
      for (int k = 0; k < len; ++k) {
        int g = 1 + (int)(rng() % ctx.rank());
        w.push(rng() % 2 ? g : -g);
      }
      NormalForm nf = normal_form(w, ctx);
      CHECK(equal(w, nf_to_word(nf, ctx), ctx));
      // left-weighted, no interior longest element, no identities
      for (const auto& s : nf.simples) {
        CHECK(s.len > 0);
        CHECK_FALSE(ctx.is_longest(s));
      }
      for (size_t i = 0; i + 1 < nf.simples.size(); ++i) {
        int moves = ctx.left_descents(nf.simples[i + 1]) &
                    ~ctx.right_descents(nf.simples[i]);
        CHECK(moves == 0);
      }
    }
  }
}

TEST_CASE("soundness fuzz: inserting relators preserves equality") {
  std::mt19937_64 rng(23);
  for (std::string label : {"A3", "B3", "I2:5"}) {
    CoxeterContext ctx(standard_graph(label));
    auto edges = ctx.graph().edges();
    for (int it = 0; it < 60; ++it) {
      std::vector<int> base;
      int len = (int)(rng() % 16);
      for (int k = 0; k < len; ++k) {
        int g = 1 + (int)(rng() % ctx.rank());
        base.push_back(rng() % 2 ? g : -g);
      }
      // build a second word with relators / trivial pairs spliced in
      std::vector<int> spiced;
      auto splice = [&] {
        if (rng() % 2 == 0 || edges.empty()) {
          int g = 1 + (int)(rng() % ctx.rank());
          spiced.push_back(g);
          spiced.push_back(-g);
        } else {
          auto [i, j, m] = edges[rng() % edges.size()];
          for (int k = 0; k < m; ++k) spiced.push_back(k % 2 ? j + 1 : i + 1);
          for (int k = m - 1; k >= 0; --k) spiced.push_back(-(k % 2 ? i + 1 : j + 1));
        }
      };
      for (int v : base) {
        if (rng() % 3 == 0) splice();
        spiced.push_back(v);
      }
      splice();
      CHECK(equal(BraidWord(base), BraidWord(spiced), ctx));
    }
  }
}

TEST_CASE("separation fuzz: w and w*g never equal") {
  std::mt19937_64 rng(29);
  for (std::string label : {"A3", "H3", "I2:6"}) {
    CoxeterContext ctx(standard_graph(label));
    for (int it = 0; it < 60; ++it) {
      BraidWord w;
      int len = (int)(rng() % 20);
      for (int k = 0; k < len; ++k) {
        int g = 1 + (int)(rng() % ctx.rank());
        w.push(rng() % 2 ? g : -g);
      }
      BraidWord wg = w;
      wg.push(1 + (int)(rng() % ctx.rank()));
      CHECK_FALSE(equal(w, wg, ctx));
    }
  }
}

TEST_CASE("word cap guard") {
  CoxeterContext ctx(standard_graph("A2"), 16);
  std::vector<int> big(17, 1);
  CHECK_THROWS_AS(normal_form(BraidWord(big), ctx), resource_error);
}

// --------------------------------------------------------------------------

TEST_CASE("torus group normal forms") {
  // x = +-1, y = +-2 in <x,y | x^2 = y^m>
  CHECK(torus_equal(W({1, 1}), W({2, 2, 2}), 3));
  CHECK(torus_equal(W({1, 1}), [&] {
    BraidWord w;
    for (int i = 0; i < 7; ++i) w.push(2);
    return w;
  }(), 7));
  CHECK_FALSE(torus_equal(W({1, 2, -1, -2}), BraidWord(), 3));
  CHECK_FALSE(torus_equal(W({1}), W({2}), 5));
  CHECK(torus_equal(W({1, -1}), BraidWord(), 4));

  // m = 3: (xy)(yx)(xy) = x y^6
  BraidWord lhs = W({1, 2, 2, 1, 1, 2});
  BraidWord rhs = W({1, 2, 2, 2, 2, 2, 2});
  CHECK(torus_equal(lhs, rhs, 3));
}

TEST_CASE("torus words against the braid group for odd m") {
  // <x,y | x^2 = y^m> is the rank-two Artin group for odd m, via
  // x -> (b1 b2 ...)_m, y -> b1 b2. Random words must agree.
  std::mt19937_64 rng(31);
  for (int m : {3, 5, 7}) {
    CoxeterContext ctx(standard_graph("I2:" + std::to_string(m)));
    BraidWord xw, yw;
    for (int k = 0; k < m; ++k) xw.push(k % 2 == 0 ? 1 : 2);
    yw = W({1, 2});
    auto translate = [&](const BraidWord& w) {
      BraidWord out;
      for (int l : w.letters()) {
        const BraidWord& img = (l == 1 || l == -1) ? xw : yw;
        if (l > 0)
          out.append(img);
        else
          out.append_inverse(img);
      }
      return out;
    };
    for (int it = 0; it < 25; ++it) {
      BraidWord u, v;
      for (int k = 0; k < (int)(rng() % 6); ++k)
        u.push((rng() % 2 ? 1 : -1) * (1 + (int)(rng() % 2)));
      for (int k = 0; k < (int)(rng() % 6); ++k)
        v.push((rng() % 2 ? 1 : -1) * (1 + (int)(rng() % 2)));
      CHECK(torus_equal(u, v, m) == equal(translate(u), translate(v), ctx));
    }
  }
}
