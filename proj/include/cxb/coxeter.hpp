#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cxb/cyclo.hpp"

namespace cxb {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weighted graph: at most one edge per vertex pair, weights >= 3,
// absent edge means weight 2. Stored as the full Coxeter matrix.
class CoxeterGraph {
 public:
  CoxeterGraph() : rank_(0) {}
  explicit CoxeterGraph(int rank) : rank_(rank), m_(rank * rank, 2) {
    for (int i = 0; i < rank; ++i) m_[i * rank + i] = 2;  // convention m_ii = 2
  }

  int rank() const { return rank_; }
  int weight(int i, int j) const { return i == j ? 2 : m_[i * rank_ + j]; }
  void set_weight(int i, int j, int w);

  // (i, j, m) with i < j and m >= 3
  std::vector<std::array<int, 3>> edges() const;
  std::vector<int> neighbors(int i) const;
  bool connected() const;
  bool simply_laced() const;

  bool operator==(const CoxeterGraph& o) const {
    return rank_ == o.rank_ && m_ == o.m_;
  }

 private:
  int rank_;
  std::vector<int> m_;
};

// Classification against the finite list. family == 0 means not finite.
struct TypeInfo {
  char family = 0;   // 'A','B','D','E','F','G','H','I'
  int rank = 0;
  int m = 0;         // rank-2 edge weight (I2(m) family, incl. A2/B2/H2/G2)
  std::string label; // "A3", "B2", "H4", "I2(7)", or "not finite"
  long long order = 0;
  int coxeter_number = 0;

  bool finite() const { return family != 0; }
};

TypeInfo classify_finite(const CoxeterGraph& g);

// Graph with the book numbering for a type label ("A3", "H4", "I2:7", "I2(7)").
CoxeterGraph standard_graph(const std::string& label);
TypeInfo type_by_label(const std::string& label);

// Square matrix over CycloReal, row-major.
struct CMatrix {
  int n = 0;
  std::vector<CycloReal> a;

  CMatrix() = default;
  explicit CMatrix(int n_) : n(n_), a(n_ * n_) {}
  CycloReal& at(int i, int j) { return a[(size_t)i * n + j]; }
  const CycloReal& at(int i, int j) const { return a[(size_t)i * n + j]; }
  bool operator==(const CMatrix& o) const { return n == o.n && a == o.a; }
  size_t hash() const;
};

// Element of W in the reflection representation. Matrix and inverse are
// maintained together; length is kept incrementally current.
struct GroupElement {
  CMatrix mat, inv;
  int len = 0;
  mutable int ldesc = -1, rdesc = -1;  // descent bitmask caches

  bool operator==(const GroupElement& o) const { return mat == o.mat; }
  size_t hash() const { return mat.hash(); }
};

// Finite Coxeter graph together with its reflection representation, positive
// roots and longest element. Immutable once built; safe to share across
// threads.
class CoxeterContext {
 public:
  explicit CoxeterContext(const CoxeterGraph& g, size_t word_cap = 10000);

  const CoxeterGraph& graph() const { return graph_; }
  const TypeInfo& type() const { return type_; }
  int rank() const { return graph_.rank(); }
  const CycloLevel* level() const { return lvl_; }
  size_t word_cap() const { return word_cap_; }

  const std::vector<std::vector<CycloReal>>& positive_roots() const {
    return pos_roots_;
  }
  const GroupElement& longest() const { return w0_; }
  const std::vector<int>& longest_word() const { return w0_word_; }
  int tau(int i) const { return tau_[i]; }  // w0 s_i w0 = s_tau(i)

  GroupElement identity() const;
  GroupElement generator(int i) const;

  // in-place products with a generator, length and caches maintained
  void rmul_gen(GroupElement& g, int i) const;  // g <- g * s_i
  void lmul_gen(GroupElement& g, int i) const;  // g <- s_i * g

  GroupElement mult(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement conj_by_w0(const GroupElement& g) const;

  int left_descents(const GroupElement& g) const;   // bitmask
  int right_descents(const GroupElement& g) const;  // bitmask
  bool is_identity(const GroupElement& g) const { return g.len == 0; }
  bool is_longest(const GroupElement& g) const { return g.len == w0_.len; }

  // number of positive roots sent negative; recomputed from the matrix
  int length_from_matrix(const CMatrix& m) const;

  // shortest word via greedy left-descent extraction (smallest index first)
  std::vector<int> reduced_word(GroupElement g) const;

  // product of generators |i|-1 for a word over signed 1-based letters
  GroupElement eval_word(const std::vector<int>& word) const;

 private:
  int root_sign(const std::vector<CycloReal>& v) const;
  std::vector<CycloReal> apply(const CMatrix& m,
                               const std::vector<CycloReal>& v) const;

  CoxeterGraph graph_;
  TypeInfo type_;
  const CycloLevel* lvl_;
  size_t word_cap_;
  std::vector<CycloReal> edge_coeff_;  // 2cos(pi/m_ij) per pair, row-major
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<CycloReal>> pos_roots_;
  GroupElement w0_;
  std::vector<int> w0_word_;
  std::vector<int> tau_;
};

struct EnumeratedGroup {
  std::vector<GroupElement> elements;      // BFS order, identity first
  std::vector<std::vector<int>> words;     // reduced word per element
};

// Full BFS enumeration; throws resource_error if |W| would exceed bound.
EnumeratedGroup enumerate_group(const CoxeterContext& ctx, long long bound);

}  // namespace cxb
