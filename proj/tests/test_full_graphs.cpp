// Whole-graph runs of the transport machinery on the rank-four types; the
// ball-restricted acceptance runs are a subset of these.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cxb/verify.hpp"

using namespace cxb;

TEST_CASE("twist labelings cover the full rank-four graphs") {
  for (std::string label : {"A4", "B4", "D4", "F4", "H4"}) {
    Folding f = default_folding(label);
    ExchangeGraph g = build_ceg(f);
    CoxeterContext ctx(f.target, 400000);
    VerificationReport rep;
    TwistLabeling lab = build_twist_labeling(g, ctx, rep);
    INFO(label, " labeling: ", rep.failure);
    CHECK(rep.ok);
    for (size_t v = 0; v < g.vertex_count(); ++v) CHECK(lab.labeled((int)v));
    auto prep = verify_presentations(g, lab, ctx);
    INFO(label, " presentations: ", prep.failure);
    CHECK(prep.ok);
  }
}

TEST_CASE("every reachable quiver classifies into the cycle patterns") {
  for (std::string label :
       {"A3", "A4", "B3", "B4", "D4", "F4", "G2", "H3", "H4", "I2:9"}) {
    for (const auto& f : folding_catalog(label)) {
      ExchangeGraph g = build_ceg(f);
      long long cycles = 0;
      for (size_t v = 0; v < g.vertex_count(); ++v)
        cycles += (long long)chordless_cycles(g.quivers[v]).size();
      INFO(label, " via ", f.source_type.label);
      CHECK(cycles >= 0);  // classification itself throws on failure
    }
  }
}

TEST_CASE("rank one") {
  Folding f = default_folding("A1");
  ExchangeGraph g = build_ceg(f);
  CHECK(g.vertex_count() == 2);
  CHECK(enumerate_polygons(g).empty());
  CHECK(h1_polygon_complex(g, {}).empty());
  CoxeterContext ctx(f.target);
  VerificationReport rep;
  TwistLabeling lab = build_twist_labeling(g, ctx, rep);
  CHECK(rep.ok);
  CHECK(lab.labeled(1));
}
