#pragma once

#include "cxb/folding.hpp"

namespace cxb {

// Exchange matrix with principal coefficients on the unfolded vertices.
// Columns of C are the c-vectors in the initial frame; C stays invertible
// and column sign-coherent along any mutation path.
struct Seed {
  IntMatrix B;  // skew-symmetric, source rank
  IntMatrix C;

  bool operator==(const Seed& o) const { return B == o.B && C == o.C; }
};

enum class Orientation { ascending, descending };

// Initial seed for a folding: every source edge oriented by the target
// numbering (lift of "small index to large" on the target), C = identity.
Seed initial_seed(const Folding& f, Orientation o = Orientation::ascending);

void mutate_inplace(Seed& s, int k);
Seed mutate(const Seed& s, int k);

// Simultaneous mutation over the fiber of a target vertex (an independent
// set, so the order does not matter).
Seed weighted_mutate(const Folding& f, const Seed& s, int target_vertex);

bool c_columns_sign_coherent(const IntMatrix& C);

// Canonical identifier of the weighted seed: serialization of (B|C) under
// the column ordering that sorts the c-vectors, together with the induced
// fiber pattern. Two seeds get the same key iff they agree up to a
// fiber-pattern-compatible relabeling of the source vertices.
std::string canonical_seed_key(const Folding& f, const Seed& s);
// plain cluster identity: any relabeling allowed (reference BFS)
std::string canonical_seed_key_unrestricted(const Seed& s);

// The relabeling pi with pi(a) = b (columns of a.C matched to b.C and B
// conjugated accordingly); throws if the seeds are not equivalent.
std::vector<int> match_columns(const Seed& a, const Seed& b);

// ---------------------------------------------------------------------------

enum class Pattern { I, II, III, IV };

// Chordless oriented cycle of a weighted quiver together with its shape:
//   I   all-weight-3 l-cycle, l >= 3
//   II  3-cycle with two weight-m arrows through one vertex, m in {4,5}
//   III 4-cycle with weights m,3,m,3, m in {4,5}
//   IV  3-cycle with all weights 5
// The stored cycle is rotated to the labeling the relator tables use.
struct PotentialTerm {
  std::vector<int> cycle;  // vertex list in arrow order
  Pattern pattern;
};

// Every chordless oriented cycle, classified; throws fold_error when a
// cycle fits no pattern (the quiver is then not of finite weighted type).
std::vector<PotentialTerm> chordless_cycles(const WeightedQuiver& q);

const char* pattern_name(Pattern p);

// weight-3 arrow quiver of a simply laced exchange matrix (entries in {0,+-1})
WeightedQuiver quiver_of_matrix(const IntMatrix& B);

nlohmann::ordered_json seed_to_json(const Seed& s);

}  // namespace cxb
