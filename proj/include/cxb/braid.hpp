#pragma once

#include "cxb/garside.hpp"
#include "cxb/quiver.hpp"
#include "cxb/word.hpp"

namespace cxb {

struct Relator {
  BraidWord word;       // expected trivial in the braid group
  std::string kind;     // "braid", "commute", "I", "II", "III", "IV"
  std::string display;  // Br/Co notation, e.g. "Co(b1, b2^{b3 b2})"
};

struct Presentation {
  int generators = 0;  // one per quiver vertex, 1-based in words
  std::vector<Relator> relators;
};

// Presentation attached to a weighted quiver with potential: one Br^m
// relator per arrow, explicit commutation relators for non-adjacent pairs,
// and the pattern relators of the potential terms.
Presentation presentation_from_wqp(const WeightedQuiver& q,
                                   const std::vector<PotentialTerm>& terms);
Presentation presentation_of_quiver(const WeightedQuiver& q);  // terms computed

// Words in the standard generators of the initial braid group, one per
// quiver vertex. The identity assignment at the initial seed.
struct GeneratorExpression {
  std::vector<BraidWord> expr;

  static GeneratorExpression standard(int n) {
    GeneratorExpression g;
    for (int i = 0; i < n; ++i) g.expr.push_back(BraidWord::gen(i + 1));
    return g;
  }
  const BraidWord& operator[](int i) const { return expr[i]; }
  int size() const { return (int)expr.size(); }
  bool operator==(const GeneratorExpression& o) const { return expr == o.expr; }
};

// Transport along the forward mutation at k. q_after is the folded quiver
// after the mutation: generators with an arrow from k pick up a conjugation
// by the expression of k.
GeneratorExpression theta_sharp(const GeneratorExpression& at_y,
                                const WeightedQuiver& q_after, int k);
// Inverse transport: recover the expressions at y from those at mu_k(y);
// q_before is the folded quiver at y.
GeneratorExpression theta_flat(const GeneratorExpression& at_y_after,
                               const WeightedQuiver& q_before, int k);

// replace each expression by its normal-form word when it grows past the
// threshold and that is shorter
void renormalize(GeneratorExpression& g, const CoxeterContext& ctx,
                 size_t threshold);

// substitute expressions into a relator word over the quiver generators
BraidWord substitute(const BraidWord& relator, const GeneratorExpression& g);

// the homomorphism induced by a folding: a target generator maps to the
// product of its fiber's generators, ascending
BraidWord iota_f(const Folding& f, const BraidWord& w);

// every relator maps to the identity in the reflection representation
bool coxeter_check(const Presentation& p, const CoxeterContext& ctx);
// same, under substituted generator expressions
bool coxeter_check(const Presentation& p, const GeneratorExpression& g,
                   const CoxeterContext& ctx);

std::string presentation_text(const Presentation& p);
nlohmann::ordered_json presentation_to_json(const Presentation& p);

}  // namespace cxb
