#pragma once

#include <unordered_map>

#include "cxb/quiver.hpp"

namespace cxb {

struct CegOptions {
  Orientation orientation = Orientation::ascending;
  size_t max_vertices = 500000;
  int threads = 0;  // 0 = library default
};

// Oriented exchange graph of weighted seeds. Vertices are canonical seed
// classes; rep[v] is the labeled seed of first arrival, so the fixed fibers
// of the folding keep their meaning at every vertex. out[v][k] is the vertex
// reached by the weighted mutation at target vertex k.
struct ExchangeGraph {
  Folding fold;
  Orientation orientation = Orientation::ascending;
  std::vector<Seed> reps;
  std::vector<WeightedQuiver> quivers;
  std::vector<std::vector<int>> out;
  std::unordered_map<std::string, int> key_to_id;
  int initial = 0;

  int drank() const { return fold.target.rank(); }
  size_t vertex_count() const { return reps.size(); }
  int vertex_of(const Seed& s) const;  // -1 when absent

  // deduplicated unoriented adjacency, sorted
  std::vector<std::vector<int>> adjacency() const;
  size_t edge_count() const;
  // the relabeling of target vertices picked up when the mutation at k from
  // v lands on rep[out[v][k]]; identity for most edges
  std::vector<int> edge_delta(int v, int k) const;
};

// Breadth-first construction over weighted mutations with canonical-key
// deduplication. Frontier expansion runs in parallel; vertex numbering is
// deterministic and independent of the thread count.
ExchangeGraph build_ceg(const Folding& f, const CegOptions& opt = {});

// Plain serial queue with unrestricted (full relabeling) seed identity;
// reference implementation kept for cross-checking the builder.
ExchangeGraph build_ceg_reference(const Folding& f,
                                  Orientation o = Orientation::ascending,
                                  size_t max_vertices = 100000);

// The cycle traced by alternating the two mutations of a vertex pair.
// Closes after m+2 steps where m is the weight between the labels. The
// source is the vertex where both c-vector fibers are positive, the sink
// where both are negative; the two source-to-sink arcs have lengths 2 and m.
struct Polygon {
  std::vector<int> vertices;  // cycle order, starting at the source
  int label_a = 0, label_b = 0;
  int m = 2;
  int source = 0, sink = 0;
};

std::vector<Polygon> enumerate_polygons(const ExchangeGraph& g);

// unoriented graph isomorphism (labels dropped)
bool isomorphic(const ExchangeGraph& g1, const ExchangeGraph& g2);

// invariant factors of the first homology of the polygon 2-complex;
// entries > 1 are torsion, zeros are free ranks, empty means trivial
std::vector<long long> h1_polygon_complex(const ExchangeGraph& g,
                                          const std::vector<Polygon>& polys);

std::string ceg_to_dot(const ExchangeGraph& g, bool oriented,
                       const std::vector<Polygon>* polys = nullptr);
nlohmann::ordered_json ceg_to_json(const ExchangeGraph& g,
                                   const std::vector<Polygon>* polys = nullptr);

}  // namespace cxb
