#include "cxb/garside.hpp"

namespace cxb {

namespace {

// make (a, b) left-weighted: move generators from the head of b to the
// tail of a while lengths stay additive. Returns true if anything moved.
bool fix_pair(GroupElement& a, GroupElement& b, const CoxeterContext& ctx) {
  bool moved = false;
  while (b.len > 0) {
    int cand = ctx.left_descents(b) & ~ctx.right_descents(a);
    if (!cand) break;
    int i = __builtin_ctz((unsigned)cand);
    ctx.rmul_gen(a, i);
    ctx.lmul_gen(b, i);
    moved = true;
  }
  return moved;
}

}  // namespace

NormalForm normal_form(const BraidWord& w, const CoxeterContext& ctx) {
  if (w.size() > ctx.word_cap())
    throw resource_error("normal_form: word length " + std::to_string(w.size()) +
                         " exceeds cap " + std::to_string(ctx.word_cap()));
  if (w.max_generator() > ctx.rank())
    throw std::invalid_argument("normal_form: generator index out of range");

  // A negative letter contributes Delta^-1 * lift(w0 s); the Delta^-1 then
  // passes over everything to its left, twisting it by tau. Only the parity
  // of the number of later negatives matters since tau is an involution, and
  // tau acts on both letter shapes by relabeling: tau(s_i) = s_tau(i) and
  // tau(w0 s_i) = w0 s_tau(i).
  struct Stamped {
    int gen;
    bool neg;
    int stamp;
  };
  std::vector<Stamped> raw;
  raw.reserve(w.size());
  int negs = 0;
  for (int letter : w.letters()) {
    int i = (letter > 0 ? letter : -letter) - 1;
    if (letter < 0) ++negs;
    raw.push_back({i, letter < 0, negs});
  }

  NormalForm nf;
  nf.delta = -negs;
  std::vector<GroupElement> xs;
  xs.reserve(raw.size());
  for (const auto& st : raw) {
    int i = (negs - st.stamp) % 2 == 1 ? ctx.tau(st.gen) : st.gen;
    if (st.neg) {
      GroupElement g = ctx.longest();
      ctx.rmul_gen(g, i);  // w0 * s_i, length l(w0) - 1
      xs.push_back(std::move(g));
    } else {
      xs.push_back(ctx.generator(i));
    }
  }

  // left-weighting sweeps until stable; drop identities as they appear
  bool changed = true;
  while (changed) {
    changed = false;
    size_t out = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (xs[i].len == 0) { changed = true; continue; }
      if (out > 0) {
        if (fix_pair(xs[out - 1], xs[i], ctx)) changed = true;
        if (xs[i].len == 0) { changed = true; continue; }
      }
      if (out != i) xs[out] = std::move(xs[i]);
      ++out;
    }
    xs.resize(out);
  }

  // absorb leading copies of the Garside element
  size_t lead = 0;
  while (lead < xs.size() && ctx.is_longest(xs[lead])) ++lead;
  nf.delta += (int)lead;
  nf.simples.assign(std::make_move_iterator(xs.begin() + lead),
                    std::make_move_iterator(xs.end()));
  return nf;
}

BraidWord nf_to_word(const NormalForm& nf, const CoxeterContext& ctx) {
  BraidWord out;
  const auto& w0w = ctx.longest_word();
  if (nf.delta >= 0) {
    for (int k = 0; k < nf.delta; ++k)
      for (int i : w0w) out.push(i + 1);
  } else {
    for (int k = 0; k < -nf.delta; ++k)
      for (auto it = w0w.rbegin(); it != w0w.rend(); ++it) out.push(-(*it + 1));
  }
  for (const auto& s : nf.simples)
    for (int i : ctx.reduced_word(s)) out.push(i + 1);
  return out;
}

bool is_trivial(const BraidWord& w, const CoxeterContext& ctx) {
  if (w.empty()) return true;
  return normal_form(w, ctx).trivial();
}

bool equal(const BraidWord& u, const BraidWord& v, const CoxeterContext& ctx) {
  BraidWord w = u;
  w.append_inverse(v);
  return is_trivial(w, ctx);
}

BraidWord shorten(const BraidWord& w, const CoxeterContext& ctx) {
  BraidWord cand = nf_to_word(normal_form(w, ctx), ctx);
  return cand.size() < w.size() ? cand : w;
}

// ---------------------------------------------------------------------------

TorusWord torus_normal_form(const BraidWord& w, int m) {
  if (m < 2) throw std::invalid_argument("torus_normal_form: m >= 2");
  TorusWord t;
  auto push_x = [&] {
    if (!t.syllables.empty() && t.syllables.back().first == 'x') {
      t.syllables.pop_back();
      t.z += 1;
    } else {
      t.syllables.push_back({'x', 1});
    }
  };
  auto push_y = [&](int amount) {  // 0 < amount < m
    if (!t.syllables.empty() && t.syllables.back().first == 'y') {
      int total = t.syllables.back().second + amount;
      t.z += total / m;
      total %= m;
      if (total == 0)
        t.syllables.pop_back();
      else
        t.syllables.back().second = total;
    } else {
      t.syllables.push_back({'y', amount});
    }
  };
  for (int letter : w.letters()) {
    switch (letter) {
      case 1: push_x(); break;
      case -1: t.z -= 1; push_x(); break;
      case 2: push_y(1); break;
      case -2: t.z -= 1; push_y(m - 1); break;
      default:
        throw std::invalid_argument("torus word letters must be +-1 or +-2");
    }
  }
  return t;
}

bool torus_equal(const BraidWord& u, const BraidWord& v, int m) {
  return torus_normal_form(u, m) == torus_normal_form(v, m);
}

}  // namespace cxb
