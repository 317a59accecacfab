#include "cxb/braid.hpp"

#include <sstream>

namespace cxb {

namespace {

std::string bsub(int v) { return "b" + std::to_string(v + 1); }

// display for x^{c_1 c_2 ...} with conjugators listed left to right
std::string conj_display(int base, const std::vector<int>& conj) {
  std::string s = bsub(base);
  if (conj.empty()) return s;
  s += "^{";
  for (size_t i = 0; i < conj.size(); ++i) {
    if (i) s += " ";
    s += bsub(conj[i]);
  }
  s += "}";
  return s;
}

// word for b_base conjugated by the product of the given generators,
// a^b = b^-1 a b with b read left to right
BraidWord conj_word(int base, const std::vector<int>& conj) {
  BraidWord c;
  for (int v : conj) c.push(v + 1);
  return BraidWord::conj(BraidWord::gen(base + 1), c);
}

}  // namespace

Presentation presentation_from_wqp(const WeightedQuiver& q,
                                   const std::vector<PotentialTerm>& terms) {
  Presentation p;
  p.generators = q.n;
  for (int a = 0; a < q.n; ++a)
    for (int b = a + 1; b < q.n; ++b) {
      int m = q.weight_between(a, b);
      Relator r;
      r.word = BraidWord::braid_relator(BraidWord::gen(a + 1),
                                        BraidWord::gen(b + 1), m);
      if (m == 2) {
        r.kind = "commute";
        r.display = "Co(" + bsub(a) + ", " + bsub(b) + ")";
      } else {
        r.kind = "braid";
        r.display = (m == 3 ? "Br(" : "Br^" + std::to_string(m) + "(") +
                    bsub(a) + ", " + bsub(b) + ")";
      }
      p.relators.push_back(std::move(r));
    }
  for (const auto& t : terms) {
    const auto& c = t.cycle;
    int l = (int)c.size();
    switch (t.pattern) {
      case Pattern::I: {
        // Co(b_2, b_1^{b_l b_{l-1} ... b_3})
        std::vector<int> conj;
        for (int k = l - 1; k >= 2; --k) conj.push_back(c[k]);
        Relator r;
        r.word = BraidWord::commutator(BraidWord::gen(c[1] + 1),
                                       conj_word(c[0], conj));
        r.kind = "I";
        r.display = "Co(" + bsub(c[1]) + ", " + conj_display(c[0], conj) + ")";
        p.relators.push_back(std::move(r));
        break;
      }
      case Pattern::II: {
        Relator r;
        r.word = BraidWord::commutator(BraidWord::gen(c[0] + 1),
                                       conj_word(c[2], {c[1]}));
        r.kind = "II";
        r.display = "Co(" + bsub(c[0]) + ", " + conj_display(c[2], {c[1]}) + ")";
        p.relators.push_back(std::move(r));
        break;
      }
      case Pattern::III: {
        Relator r;
        r.word = BraidWord::commutator(BraidWord::gen(c[2] + 1),
                                       conj_word(c[1], {c[0], c[3]}));
        r.kind = "III";
        r.display =
            "Co(" + bsub(c[2]) + ", " + conj_display(c[1], {c[0], c[3]}) + ")";
        p.relators.push_back(std::move(r));
        break;
      }
      case Pattern::IV: {
        Relator r1;
        r1.word = BraidWord::commutator(BraidWord::gen(c[0] + 1),
                                        conj_word(c[1], {c[2], c[1]}));
        r1.kind = "IV";
        r1.display =
            "Co(" + bsub(c[0]) + ", " + conj_display(c[1], {c[2], c[1]}) + ")";
        p.relators.push_back(std::move(r1));
        Relator r2;
        r2.word = BraidWord::braid_relator(BraidWord::gen(c[0] + 1),
                                           conj_word(c[2], {c[1]}), 3);
        r2.kind = "IV";
        r2.display = "Br(" + bsub(c[0]) + ", " + conj_display(c[2], {c[1]}) + ")";
        p.relators.push_back(std::move(r2));
        break;
      }
    }
  }
  return p;
}

Presentation presentation_of_quiver(const WeightedQuiver& q) {
  return presentation_from_wqp(q, chordless_cycles(q));
}

GeneratorExpression theta_sharp(const GeneratorExpression& at_y,
                                const WeightedQuiver& q_after, int k) {
  GeneratorExpression out;
  out.expr.reserve(at_y.size());
  for (int j = 0; j < at_y.size(); ++j) {
    if (j != k && q_after.arrow(k, j)) {
      BraidWord w = at_y[k];
      w.append(at_y[j]);
      w.append_inverse(at_y[k]);
      out.expr.push_back(std::move(w));
    } else {
      out.expr.push_back(at_y[j]);
    }
  }
  return out;
}

GeneratorExpression theta_flat(const GeneratorExpression& at_y_after,
                               const WeightedQuiver& q_before, int k) {
  GeneratorExpression out;
  out.expr.reserve(at_y_after.size());
  for (int j = 0; j < at_y_after.size(); ++j) {
    if (j != k && q_before.arrow(j, k)) {
      BraidWord w = at_y_after[k].inverse();
      w.append(at_y_after[j]);
      w.append(at_y_after[k]);
      out.expr.push_back(std::move(w));
    } else {
      out.expr.push_back(at_y_after[j]);
    }
  }
  return out;
}

void renormalize(GeneratorExpression& g, const CoxeterContext& ctx,
                 size_t threshold) {
  for (auto& w : g.expr)
    if (w.size() > threshold) w = shorten(w, ctx);
}

BraidWord substitute(const BraidWord& relator, const GeneratorExpression& g) {
  BraidWord out;
  for (int letter : relator.letters()) {
    int idx = (letter > 0 ? letter : -letter) - 1;
    if (letter > 0)
      out.append(g[idx]);
    else
      out.append_inverse(g[idx]);
  }
  return out;
}

BraidWord iota_f(const Folding& f, const BraidWord& w) {
  BraidWord out;
  for (int letter : w.letters()) {
    int a = (letter > 0 ? letter : -letter) - 1;
    const auto& fib = f.fibers.at(a);
    if (letter > 0) {
      for (int i : fib) out.push(i + 1);
    } else {
      for (auto it = fib.rbegin(); it != fib.rend(); ++it) out.push(-(*it + 1));
    }
  }
  return out;
}

bool coxeter_check(const Presentation& p, const CoxeterContext& ctx) {
  return coxeter_check(p, GeneratorExpression::standard(p.generators), ctx);
}

bool coxeter_check(const Presentation& p, const GeneratorExpression& g,
                   const CoxeterContext& ctx) {
  for (const auto& r : p.relators) {
    GroupElement e = ctx.eval_word(substitute(r.word, g).letters());
    if (!ctx.is_identity(e)) return false;
  }
  return true;
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream os;
  os << "<";
  for (int i = 0; i < p.generators; ++i) os << (i ? ", " : " ") << bsub(i);
  os << " |";
  for (size_t i = 0; i < p.relators.size(); ++i)
    os << (i ? ", " : " ") << p.relators[i].display;
  os << " >";
  return os.str();
}

nlohmann::ordered_json presentation_to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  auto gens = nlohmann::ordered_json::array();
  for (int i = 0; i < p.generators; ++i) gens.push_back(bsub(i));
  j["generators"] = gens;
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relators) {
    nlohmann::ordered_json rj;
    rj["word"] = r.word.letters();
    rj["kind"] = r.kind;
    rj["display"] = r.display;
    rels.push_back(rj);
  }
  j["relators"] = rels;
  return j;
}

}  // namespace cxb
