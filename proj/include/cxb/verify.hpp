#pragma once

#include "cxb/braid.hpp"
#include "cxb/exchange.hpp"

namespace cxb {

struct VerificationReport {
  std::string suite;
  bool ok = true;
  long long checks = 0;
  std::vector<std::string> lines;  // summary, one per subcheck group
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::string failure;  // first failure, empty when ok
  nlohmann::ordered_json counterexample = nlohmann::ordered_json::object();

  void fail(const std::string& what, nlohmann::ordered_json payload) {
    if (!ok) return;
    ok = false;
    failure = what;
    counterexample = std::move(payload);
  }
  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  int threads = 0;
  size_t renorm_threshold = 512;
  size_t word_cap = 200000;
  int radius = -1;          // twist labeling: -1 = whole graph
  int sequence_length = 8;  // theta suite
  int samples = 100;
  uint64_t seed = 42;
};

// Braid words assigned to the local twists of every (labeled) vertex,
// transported from the standard generators at the initial vertex.
struct TwistLabeling {
  std::vector<GeneratorExpression> words;
  std::vector<int> depth;  // -1 when outside the labeling radius
  std::vector<std::vector<int>> path;  // discovery path of mutation labels

  bool labeled(int v) const { return depth[v] >= 0; }
};

// generators inside each fiber commute, so the fiber product is
// order-independent in the unfolded braid group
VerificationReport verify_local_twist_decomposition(const Folding& f,
                                                    const VerifyOptions& o = {});

// Transport generator expressions over the whole exchange graph (or a ball);
// every revisit must agree up to braid-group equality. Success is exactly
// the statement that all polygon relations hold among the twists.
TwistLabeling build_twist_labeling(const ExchangeGraph& g,
                                   const CoxeterContext& ctx,
                                   VerificationReport& report,
                                   const VerifyOptions& o = {});

// At every labeled vertex, the relators of the quiver presentation vanish
// under the twist words. details["patterns"] counts relators by shape.
VerificationReport verify_presentations(const ExchangeGraph& g,
                                        const TwistLabeling& labeling,
                                        const CoxeterContext& ctx,
                                        const VerifyOptions& o = {});

// Random mutation sequences: transported endpoint relators vanish and each
// sharp/flat step round-trips to the identity on expressions.
VerificationReport verify_theta_invariance(const Folding& f,
                                           const VerifyOptions& o = {});

// The folding homomorphism: braid relations between fiber products hold in
// the unfolded group, and the induced map of reflection groups is injective.
VerificationReport verify_iota(const Folding& f, const VerifyOptions& o = {});

// Fiber products of transported unfolded twists agree with the image of the
// transported folded twists, at the initial vertex and at random vertices.
VerificationReport verify_diagram(const Folding& f, const VerifyOptions& o = {});

// Closed forms for alternating twist products in <x,y | x^2 = y^m> and the
// braid relation between xy and yx, for a range of m.
VerificationReport verify_lem_surj(int m_lo, int m_hi,
                                   const VerifyOptions& o = {});

// Relator-insertion soundness fuzz, single-generator separation fuzz and
// centrality of the square of the Garside element.
VerificationReport verify_garside_selftest(const std::string& type_label,
                                           int cases,
                                           const VerifyOptions& o = {});

}  // namespace cxb
