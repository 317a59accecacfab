#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cxb/exchange.hpp"
#include "oracles.hpp"

using namespace cxb;

TEST_CASE("rank-two exchange graphs are (m+2)-cycles for every unfolding") {
  for (int m = 3; m <= 12; ++m) {
    std::string label = "I2:" + std::to_string(m);
    for (const auto& f : folding_catalog(label)) {
      ExchangeGraph g = build_ceg(f);
      INFO(label, " via ", f.source_type.label);
      CHECK(g.vertex_count() == (size_t)m + 2);
      auto adj = g.adjacency();
      for (const auto& a : adj) CHECK(a.size() == 2);
      CHECK(g.edge_count() == (size_t)m + 2);
      auto polys = enumerate_polygons(g);
      CHECK(polys.size() == 1);
      CHECK(polys[0].m == m);
      CHECK(polys[0].vertices.size() == (size_t)m + 2);
    }
  }
}

TEST_CASE("vertex counts match the cluster-count oracle") {
  for (std::string label : {"A2", "A3", "A4", "A5", "B2", "B3", "D4", "G2", "H3"}) {
    ExchangeGraph g = build_ceg(default_folding(label));
    CHECK((long long)g.vertex_count() == oracle::cluster_count(label));
  }
}

TEST_CASE("builder agrees with the serial reference") {
  for (std::string label : {"A3", "B3", "G2", "H3", "I2:5", "I2:7", "I2:8"}) {
    for (const auto& f : folding_catalog(label)) {
      ExchangeGraph g = build_ceg(f);
      ExchangeGraph r = build_ceg_reference(f);
      CHECK(g.vertex_count() == r.vertex_count());
      CHECK(g.edge_count() == r.edge_count());
    }
  }
}

TEST_CASE("deterministic construction") {
  CegOptions one, two;
  one.threads = 1;
  two.threads = 2;
  ExchangeGraph g1 = build_ceg(default_folding("H3"), one);
  ExchangeGraph g2 = build_ceg(default_folding("H3"), two);
  REQUIRE(g1.vertex_count() == g2.vertex_count());
  CHECK(g1.out == g2.out);
  for (size_t v = 0; v < g1.vertex_count(); ++v) CHECK(g1.reps[v] == g2.reps[v]);
}

TEST_CASE("face decomposition of the rank-three graphs") {
  auto faces_by_size = [](const ExchangeGraph& g) {
    std::map<int, int> hist;
    for (const auto& p : enumerate_polygons(g)) ++hist[(int)p.vertices.size()];
    return hist;
  };
  ExchangeGraph a3 = build_ceg(default_folding("A3"));
  auto ha = faces_by_size(a3);
  CHECK(ha[4] == 3);
  CHECK(ha[5] == 6);

  ExchangeGraph b3 = build_ceg(default_folding("B3"));
  auto hb = faces_by_size(b3);
  CHECK(hb[6] == 4);
  CHECK(hb[4] + hb[5] == 8);

  ExchangeGraph h3 = build_ceg(default_folding("H3"));
  auto hh = faces_by_size(h3);
  CHECK(hh[7] == 6);
  CHECK(hh[4] + hh[5] == 12);
}

TEST_CASE("each edge lies in one polygon per complementary label") {
  for (std::string label : {"A3", "B3", "H3"}) {
    ExchangeGraph g = build_ceg(default_folding(label));
    auto polys = enumerate_polygons(g);
    std::map<std::pair<int, int>, int> edge_faces;
    for (const auto& p : polys)
      for (size_t i = 0; i < p.vertices.size(); ++i) {
        int x = p.vertices[i], y = p.vertices[(i + 1) % p.vertices.size()];
        ++edge_faces[{std::min(x, y), std::max(x, y)}];
      }
    CHECK(edge_faces.size() == g.edge_count());
    for (auto& [e, cnt] : edge_faces) CHECK(cnt == g.drank() - 1);
  }
}

TEST_CASE("exchange graphs are independent of the unfolding") {
  for (int m : {6, 8, 12}) {
    auto cat = folding_catalog("I2:" + std::to_string(m));
    REQUIRE(cat.size() >= 2);
    ExchangeGraph g0 = build_ceg(cat[0]);
    for (size_t i = 1; i < cat.size(); ++i) {
      ExchangeGraph gi = build_ceg(cat[i]);
      CHECK(isomorphic(g0, gi));
    }
  }
  // B3 via D4 and via A5
  auto cat = folding_catalog("B3");
  CHECK(isomorphic(build_ceg(cat[0]), build_ceg(cat[1])));
  // B4 via D5 and via A7
  auto cat4 = folding_catalog("B4");
  CHECK(isomorphic(build_ceg(cat4[0]), build_ceg(cat4[1])));
  // different types are not isomorphic
  CHECK_FALSE(isomorphic(build_ceg(default_folding("I2:6")),
                         build_ceg(default_folding("I2:3"))));
  ExchangeGraph self = build_ceg(default_folding("A3"));
  CHECK(isomorphic(self, self));
}

TEST_CASE("homology of the polygon complex") {
  for (std::string label : {"A3", "B3", "G2", "H3", "I2:5", "I2:9"}) {
    ExchangeGraph g = build_ceg(default_folding(label));
    auto polys = enumerate_polygons(g);
    auto h1 = h1_polygon_complex(g, polys);
    INFO(label);
    CHECK(h1.empty());
  }
  // a bare cycle with no faces has first homology Z
  ExchangeGraph g = build_ceg(default_folding("I2:5"));
  auto h1 = h1_polygon_complex(g, {});
  CHECK(h1 == std::vector<long long>{0});
}

TEST_CASE("orientation flag changes the initial seed but not the counts") {
  CegOptions o;
  o.orientation = Orientation::descending;
  ExchangeGraph g = build_ceg(default_folding("A3"), o);
  CHECK(g.vertex_count() == 14);
}

TEST_CASE("exports") {
  ExchangeGraph g = build_ceg(default_folding("I2:7"));
  auto polys = enumerate_polygons(g);
  std::string dot = ceg_to_dot(g, false, &polys);
  CHECK(dot.find("graph ceg {") == 0);
  CHECK(dot.find("--") != std::string::npos);
  std::string dot2 = ceg_to_dot(g, true);
  CHECK(dot2.find("digraph") == 0);
  auto j = ceg_to_json(g, &polys);
  CHECK(j["vertices"].size() == 9);
  CHECK(j["edges"].size() == 18);
  CHECK(j["polygons"].size() == 1);
  // byte-identical on rebuild
  ExchangeGraph g2 = build_ceg(default_folding("I2:7"));
  auto polys2 = enumerate_polygons(g2);
  CHECK(ceg_to_json(g2, &polys2).dump() == j.dump());
  CHECK(ceg_to_dot(g2, false, &polys2) == dot);
}
