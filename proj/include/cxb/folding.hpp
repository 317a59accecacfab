#pragma once

#include <json.hpp>

#include "cxb/coxeter.hpp"
#include "cxb/intmatrix.hpp"

namespace cxb {

struct fold_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simplicial map from a connected simply laced graph onto a weighted graph.
// Vertex fibers are independent sets; each edge preimage is a stack of plain
// edges or a bipartite simply laced graph whose Coxeter number matches the
// edge weight.
struct Folding {
  CoxeterGraph source;  // Lambda
  CoxeterGraph target;  // Delta
  TypeInfo source_type, target_type;
  std::vector<int> vertex_map;           // source vertex -> target vertex
  std::vector<std::vector<int>> fibers;  // target vertex -> sorted preimage

  bool is_identity() const { return source.rank() == target.rank(); }

  static Folding make(const CoxeterGraph& source, const CoxeterGraph& target,
                      const std::vector<int>& vertex_map);
  static Folding identity_of(const CoxeterGraph& g);
};

struct FoldingCheck {
  bool ok = true;
  std::string message;  // first violation when not ok
};

// Checks the defining conditions edge by edge: source connected and simply
// laced, fibers independent, non-edges have empty preimage, and every edge
// preimage a disjoint union of simply laced graphs of Coxeter number equal
// to the edge weight (plain edges for weight 3).
FoldingCheck validate_folding(const Folding& f);

// All built-in unfoldings of a finite type, most specific first; the first
// entry is the default used by graph construction. Simply laced types get
// the identity folding only.
std::vector<Folding> folding_catalog(const std::string& delta_label);
Folding default_folding(const std::string& delta_label);
// catalog entry with the given source label, e.g. ("H4", "E8")
Folding find_folding(const std::string& delta_label, const std::string& lambda_label);

// Oriented weighted graph on the target vertices. arrows[i*n+j] = m >= 3
// when there is an arrow i -> j of weight m.
struct WeightedQuiver {
  int n = 0;
  std::vector<int> arrows;

  WeightedQuiver() = default;
  explicit WeightedQuiver(int n_) : n(n_), arrows(n_ * n_, 0) {}
  int arrow(int i, int j) const { return arrows[(size_t)i * n + j]; }
  void set_arrow(int i, int j, int m) { arrows[(size_t)i * n + j] = m; }
  int weight_between(int i, int j) const {
    int a = arrow(i, j), b = arrow(j, i);
    return a ? a : b ? b : 2;
  }
  bool operator==(const WeightedQuiver& o) const {
    return n == o.n && arrows == o.arrows;
  }
};

// Fold an oriented simply laced exchange matrix on the source vertices down
// to a weighted quiver on the target vertices. Throws fold_error when the
// orientation is not uniform between two fibers, a fiber is not independent,
// or the components between two fibers have mismatched Coxeter numbers.
WeightedQuiver fold_quiver(const Folding& f, const IntMatrix& B);

nlohmann::ordered_json folding_to_json(const Folding& f);
nlohmann::ordered_json graph_to_json(const CoxeterGraph& g);
CoxeterGraph graph_from_json(const nlohmann::json& j);

}  // namespace cxb
