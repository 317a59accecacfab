#include "cxb/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <optional>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cxb {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["ok"] = ok;
  j["checks"] = checks;
  j["lines"] = lines;
  j["details"] = details;
  if (!ok) {
    j["failure"] = failure;
    j["counterexample"] = counterexample;
  }
  return j;
}

namespace {

// run tasks in parallel, collecting at most one error message per task;
// exceptions become errors so they cross thread boundaries safely
template <typename Fn>
std::vector<std::string> run_tasks(size_t n, int threads, Fn&& fn) {
  std::vector<std::string> errs(n);
#ifdef _OPENMP
  int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
#endif
  for (size_t i = 0; i < n; ++i) {
    try {
      fn(i, errs[i]);
    } catch (const std::exception& e) {
      errs[i] = e.what();
    }
  }
  return errs;
}

std::vector<int> word_letters(const BraidWord& w) { return w.letters(); }

uint64_t mix_seed(uint64_t base, uint64_t i) {
  uint64_t x = base ^ (0x9e3779b97f4a7c15ull * (i + 1));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  return x;
}

std::string matrix_key(const CMatrix& m) {
  std::string s;
  for (const auto& x : m.a) {
    if (x.is_zero()) {
      s += "z;";
      continue;
    }
    for (const auto& c : x.coeffs()) {
      s += std::to_string(c.num());
      if (c.den() != 1) {
        s += '/';
        s += std::to_string(c.den());
      }
      s += ',';
    }
    s += ';';
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_local_twist_decomposition(const Folding& f,
                                                    const VerifyOptions& o) {
  VerificationReport rep;
  rep.suite = "local-twist";
  CoxeterContext ctx(f.source, o.word_cap);
  for (size_t a = 0; a < f.fibers.size(); ++a) {
    const auto& fib = f.fibers[a];
    for (size_t p = 0; p < fib.size(); ++p)
      for (size_t q = p + 1; q < fib.size(); ++q) {
        BraidWord uv({fib[p] + 1, fib[q] + 1});
        BraidWord vu({fib[q] + 1, fib[p] + 1});
        ++rep.checks;
        if (!equal(uv, vu, ctx))
          rep.fail("fiber generators do not commute",
                   {{"fiber", a + 1}, {"pair", {fib[p] + 1, fib[q] + 1}}});
      }
    // order independence of the fiber product
    std::vector<int> asc;
    for (int i : fib) asc.push_back(i + 1);
    BraidWord ref = BraidWord(asc);
    std::vector<int> perm = asc;
    std::sort(perm.begin(), perm.end());
    do {
      ++rep.checks;
      if (!equal(ref, BraidWord(perm), ctx))
        rep.fail("fiber product is order-dependent", {{"fiber", a + 1}});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  rep.lines.push_back("fibers of " + f.target_type.label + " via " +
                      f.source_type.label + ": " + std::to_string(rep.checks) +
                      " commutation checks");
  return rep;
}

// ---------------------------------------------------------------------------

TwistLabeling build_twist_labeling(const ExchangeGraph& g,
                                   const CoxeterContext& ctx,
                                   VerificationReport& rep,
                                   const VerifyOptions& o) {
  size_t n = g.vertex_count();
  int nd = g.drank();
  TwistLabeling lab;
  lab.words.assign(n, {});
  lab.depth.assign(n, -1);
  lab.path.assign(n, {});
  lab.words[g.initial] = GeneratorExpression::standard(nd);
  lab.depth[g.initial] = 0;

  // Each unordered wall is crossed through ONE of its two forward mutations:
  // the green one (positive c-vectors on the mutated fiber), which is the
  // direction the polygon cells compose their arcs in. Crossing back through
  // the other forward mutation is a nontrivial loop (the local twist), so
  // the reverse crossing inverts the green transport instead.
  auto is_green = [&](int v, int k) {
    for (int i : g.fold.fibers[k]) {
      for (int r = 0; r < g.reps[v].C.rows(); ++r) {
        long long c = g.reps[v].C.at(r, i);
        if (c > 0) break;
        if (c < 0) return false;
      }
    }
    return true;
  };
  struct Wall {
    int v, k, w;               // green representative v -> w = out[v][k]
    std::vector<int> delta;    // relabeling picked up at w
  };
  std::map<std::pair<int, int>, Wall> walls;
  for (size_t v = 0; v < n; ++v)
    for (int k = 0; k < nd; ++k) {
      int w = g.out[v][k];
      auto key = std::make_pair(std::min((int)v, w), std::max((int)v, w));
      if (walls.count(key) || !is_green((int)v, k)) continue;
      walls.emplace(key, Wall{(int)v, k, w, g.edge_delta((int)v, k)});
    }

  // Transport the labeling of `from` across the wall. The forward transport
  // rewrites the generators with an arrow INTO the mutation vertex of the
  // far quiver by conjugation with the mutation vertex's word; this is the
  // composition under which the two arcs of every polygon transport
  // identically (the braid relation absorbs the difference).
  auto cross = [&](const Wall& wall, int from,
                   const GeneratorExpression& words) {
    GeneratorExpression cand;
    cand.expr.assign(nd, BraidWord());
    if (from == wall.v) {
      Seed t = weighted_mutate(g.fold, g.reps[wall.v], wall.k);
      GeneratorExpression moved =
          theta_flat(words, fold_quiver(g.fold, t.B), wall.k);
      for (int j = 0; j < nd; ++j) cand.expr[wall.delta[j]] = moved.expr[j];
    } else {
      GeneratorExpression undone;
      undone.expr.assign(nd, BraidWord());
      for (int j = 0; j < nd; ++j) undone.expr[j] = words[wall.delta[j]];
      cand = theta_sharp(undone, g.quivers[wall.v], wall.k);
    }
    return cand;
  };

  struct CheckTask {
    int from, to, gen;
    BraidWord transported, stored;
  };
  std::vector<CheckTask> tasks;
  std::set<std::pair<int, int>> handled;

  std::vector<int> queue = {g.initial};
  auto adj = g.adjacency();
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : adj[v]) {
      auto key = std::make_pair(std::min(v, w), std::max(v, w));
      if (handled.count(key)) continue;
      const Wall& wall = walls.at(key);
      if (lab.depth[w] < 0) {
        if (o.radius >= 0 && lab.depth[v] >= o.radius) continue;
        handled.insert(key);
        GeneratorExpression cand = cross(wall, v, lab.words[v]);
        renormalize(cand, ctx, o.renorm_threshold);
        lab.words[w] = std::move(cand);
        lab.depth[w] = lab.depth[v] + 1;
        lab.path[w] = lab.path[v];
        lab.path[w].push_back((v == wall.v ? 1 : -1) * (wall.k + 1));
        queue.push_back(w);
      } else {
        handled.insert(key);
        GeneratorExpression cand = cross(wall, v, lab.words[v]);
        for (int j = 0; j < nd; ++j)
          tasks.push_back({v, w, j, cand.expr[j], lab.words[w].expr[j]});
      }
    }
  }

  auto errs = run_tasks(tasks.size(), o.threads, [&](size_t i, std::string& err) {
    if (!equal(tasks[i].transported, tasks[i].stored, ctx))
      err = "transported twist disagrees with stored twist";
  });
  rep.checks += (long long)tasks.size();
  for (size_t i = 0; i < errs.size(); ++i)
    if (!errs[i].empty()) {
      const auto& t = tasks[i];
      rep.fail(errs[i] + " (path-dependence)",
               {{"edge_from", t.from},
                {"vertex", t.to},
                {"generator", t.gen + 1},
                {"stored_path", lab.path[t.to]},
                {"arriving_path", lab.path[t.from]},
                {"transported", word_letters(t.transported)},
                {"stored", word_letters(t.stored)}});
      break;
    }
  size_t labeled = 0;
  for (int d : lab.depth)
    if (d >= 0) ++labeled;
  rep.lines.push_back("labeled " + std::to_string(labeled) + "/" +
                      std::to_string(n) + " vertices, " +
                      std::to_string(tasks.size()) + " path-independence checks");
  return lab;
}

VerificationReport verify_presentations(const ExchangeGraph& g,
                                        const TwistLabeling& lab,
                                        const CoxeterContext& ctx,
                                        const VerifyOptions& o) {
  VerificationReport rep;
  rep.suite = "presentations";
  std::vector<int> verts;
  for (size_t v = 0; v < g.vertex_count(); ++v)
    if (lab.labeled((int)v)) verts.push_back((int)v);

  std::vector<std::map<std::string, int>> pattern_counts(verts.size());
  std::vector<long long> counts(verts.size(), 0);
  std::vector<nlohmann::ordered_json> payloads(verts.size());

  auto errs = run_tasks(verts.size(), o.threads, [&](size_t i, std::string& err) {
    int v = verts[i];
    auto terms = chordless_cycles(g.quivers[v]);
    Presentation p = presentation_from_wqp(g.quivers[v], terms);
    for (const auto& t : terms) ++pattern_counts[i][pattern_name(t.pattern)];
    if (!coxeter_check(p, lab.words[v], ctx)) {
      err = "relator fails already in the reflection group";
      payloads[i] = {{"vertex", v}, {"path", lab.path[v]}};
      return;
    }
    for (const auto& r : p.relators) {
      ++counts[i];
      BraidWord w = substitute(r.word, lab.words[v]);
      if (!is_trivial(w, ctx)) {
        err = "relator is nontrivial under the twist words";
        payloads[i] = {{"vertex", v},
                       {"path", lab.path[v]},
                       {"relator", r.display},
                       {"word", word_letters(w)}};
        return;
      }
    }
  });
  std::map<std::string, int> patterns = {{"I", 0}, {"II", 0}, {"III", 0}, {"IV", 0}};
  for (size_t i = 0; i < verts.size(); ++i) {
    rep.checks += counts[i];
    for (auto& [k, c] : pattern_counts[i]) patterns[k] += c;
    if (!errs[i].empty() && rep.ok) rep.fail(errs[i], payloads[i]);
  }
  rep.details["patterns"] = patterns;
  rep.lines.push_back(std::to_string(verts.size()) + " vertices, " +
                      std::to_string(rep.checks) + " relators checked");
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_theta_invariance(const Folding& f,
                                           const VerifyOptions& o) {
  VerificationReport rep;
  rep.suite = "theta";
  CoxeterContext ctx(f.target, o.word_cap);
  int nd = f.target.rank();

  std::vector<long long> counts(o.samples, 0);
  std::vector<nlohmann::ordered_json> payloads(o.samples);
  auto errs = run_tasks(o.samples, o.threads, [&](size_t i, std::string& err) {
    std::mt19937_64 rng(mix_seed(o.seed, i));
    int len = (int)(rng() % (o.sequence_length + 1));
    std::vector<int> seq;
    for (int s = 0; s < len; ++s) {
      int k = (int)(rng() % nd);
      if (!seq.empty() && seq.back() == k) k = (k + 1) % nd;
      seq.push_back(k);
    }
    Seed cur = initial_seed(f);
    GeneratorExpression expr = GeneratorExpression::standard(nd);
    for (int k : seq) {
      Seed next = weighted_mutate(f, cur, k);
      WeightedQuiver q_before = fold_quiver(f, cur.B);
      WeightedQuiver q_after = fold_quiver(f, next.B);
      GeneratorExpression moved = theta_sharp(expr, q_after, k);
      ++counts[i];
      if (!(theta_flat(moved, q_before, k) == expr)) {
        err = "sharp/flat round trip is not the identity";
        payloads[i] = {{"sequence", seq}, {"at", k + 1}};
        return;
      }
      expr = std::move(moved);
      renormalize(expr, ctx, o.renorm_threshold);
      cur = std::move(next);
    }
    Presentation p = presentation_of_quiver(fold_quiver(f, cur.B));
    if (!coxeter_check(p, expr, ctx)) {
      err = "transported relator fails in the reflection group";
      payloads[i] = {{"sequence", seq}};
      return;
    }
    for (const auto& r : p.relators) {
      ++counts[i];
      if (!is_trivial(substitute(r.word, expr), ctx)) {
        err = "transported relator is nontrivial";
        payloads[i] = {{"sequence", seq}, {"relator", r.display}};
        return;
      }
    }
  });
  for (int i = 0; i < o.samples; ++i) {
    rep.checks += counts[i];
    if (!errs[i].empty() && rep.ok)
      rep.fail(errs[i], payloads[i].is_null() ? nlohmann::ordered_json{{"sample", i}}
                                              : payloads[i]);
  }
  rep.lines.push_back(f.target_type.label + ": " + std::to_string(o.samples) +
                      " sequences of length <= " +
                      std::to_string(o.sequence_length) + ", " +
                      std::to_string(rep.checks) + " checks");
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_iota(const Folding& f, const VerifyOptions& o) {
  VerificationReport rep;
  rep.suite = "iota";
  CoxeterContext lam(f.source, o.word_cap);

  // (a) braid relations between the fiber products, in the unfolded group
  auto edges = f.target.edges();
  auto errs = run_tasks(edges.size(), o.threads, [&](size_t i, std::string& err) {
    auto [a, b, m] = edges[i];
    BraidWord u = iota_f(f, BraidWord::gen(a + 1));
    BraidWord v = iota_f(f, BraidWord::gen(b + 1));
    if (!is_trivial(BraidWord::braid_relator(u, v, m), lam))
      err = "Br^" + std::to_string(m) + " fails between fibers " +
            std::to_string(a + 1) + ", " + std::to_string(b + 1);
  });
  rep.checks += (long long)edges.size();
  for (auto& e : errs)
    if (!e.empty()) rep.fail(e, {{"folding", f.source_type.label}});

  // commuting pairs as well
  for (int a = 0; a < f.target.rank(); ++a)
    for (int b = a + 1; b < f.target.rank(); ++b) {
      if (f.target.weight(a, b) != 2) continue;
      BraidWord u = iota_f(f, BraidWord::gen(a + 1));
      BraidWord v = iota_f(f, BraidWord::gen(b + 1));
      ++rep.checks;
      if (!is_trivial(BraidWord::commutator(u, v), lam))
        rep.fail("fiber products of a commuting pair do not commute",
                 {{"pair", {a + 1, b + 1}}});
    }

  // (b) injectivity of the induced map on the reflection groups
  CoxeterContext del(f.target);
  EnumeratedGroup en = enumerate_group(del, 100000);
  std::vector<std::string> keys(en.elements.size());
  run_tasks(en.elements.size(), o.threads, [&](size_t i, std::string&) {
    BraidWord w;
    for (int letter : en.words[i]) w.push(letter + 1);
    BraidWord img = iota_f(f, w);
    GroupElement g = lam.identity();
    for (int letter : img.letters()) lam.rmul_gen(g, std::abs(letter) - 1);
    keys[i] = matrix_key(g.mat);
  });
  std::sort(keys.begin(), keys.end());
  size_t distinct = std::unique(keys.begin(), keys.end()) - keys.begin();
  rep.checks += (long long)en.elements.size();
  if (distinct != en.elements.size())
    rep.fail("collision among reflection images",
             {{"expected", en.elements.size()}, {"distinct", distinct}});
  rep.details["images"] = distinct;
  rep.lines.push_back(f.target_type.label + " -> " + f.source_type.label + ": " +
                      std::to_string(distinct) + " distinct images of " +
                      std::to_string(en.elements.size()) + " elements");
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_diagram(const Folding& f, const VerifyOptions& o) {
  VerificationReport rep;
  rep.suite = "diagram";
  CoxeterContext lam(f.source, o.word_cap);
  CoxeterContext del(f.target, o.word_cap);
  int nd = f.target.rank();
  int nl = f.source.rank();

  std::vector<std::vector<int>> paths;
  paths.push_back({});  // the initial vertex
  std::mt19937_64 rng(o.seed);
  for (int s = 1; s < o.samples; ++s) {
    int len = 1 + (int)(rng() % 6);
    std::vector<int> p;
    for (int k = 0; k < len; ++k) {
      int x = (int)(rng() % nd);
      if (!p.empty() && p.back() == x) x = (x + 1) % nd;
      p.push_back(x);
    }
    paths.push_back(std::move(p));
  }

  std::vector<nlohmann::ordered_json> payloads(paths.size());
  std::vector<long long> counts(paths.size(), 0);
  auto errs = run_tasks(paths.size(), o.threads, [&](size_t i, std::string& err) {
    Seed cur = initial_seed(f);
    GeneratorExpression exprD = GeneratorExpression::standard(nd);
    GeneratorExpression exprL = GeneratorExpression::standard(nl);
    for (int k : paths[i]) {
      // unfolded side: one ordinary mutation per fiber vertex, ascending
      Seed step = cur;
      for (int v : f.fibers[k]) {
        Seed next = mutate(step, v);
        exprL = theta_flat(exprL, quiver_of_matrix(next.B), v);
        step = std::move(next);
      }
      // folded side: the weighted mutation in one go
      Seed nextw = weighted_mutate(f, cur, k);
      if (!(step == nextw)) {
        err = "weighted mutation disagrees with its unfolding";
        return;
      }
      exprD = theta_flat(exprD, fold_quiver(f, nextw.B), k);
      renormalize(exprD, del, o.renorm_threshold);
      renormalize(exprL, lam, o.renorm_threshold);
      cur = std::move(nextw);
    }
    for (int a = 0; a < nd; ++a) {
      BraidWord lhs = iota_f(f, exprD[a]);
      BraidWord rhs;  // descending fiber product of the unfolded twists
      const auto& fib = f.fibers[a];
      for (auto it = fib.rbegin(); it != fib.rend(); ++it) rhs.append(exprL[*it]);
      ++counts[i];
      if (!equal(lhs, rhs, lam)) {
        err = "folded twist does not match the unfolded fiber product";
        payloads[i] = {{"path",
                        [&] {
                          std::vector<int> p;
                          for (int x : paths[i]) p.push_back(x + 1);
                          return p;
                        }()},
                       {"vertex_label", a + 1}};
        return;
      }
    }
  });
  for (size_t i = 0; i < paths.size(); ++i) {
    rep.checks += counts[i];
    if (!errs[i].empty() && rep.ok)
      rep.fail(errs[i], payloads[i].is_null()
                            ? nlohmann::ordered_json{{"sample", i}}
                            : payloads[i]);
  }
  rep.lines.push_back(f.target_type.label + " via " + f.source_type.label +
                      ": " + std::to_string(paths.size()) + " vertices, " +
                      std::to_string(rep.checks) + " generator comparisons");
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_lem_surj(int m_lo, int m_hi,
                                   const VerifyOptions&) {
  VerificationReport rep;
  rep.suite = "lem-surj";
  for (int m = m_lo; m <= m_hi; ++m) {
    BraidWord t1({1, 2});  // x y
    BraidWord t2({2, 1});  // y x
    auto alternating = [&](const BraidWord& a, const BraidWord& b) {
      BraidWord w;
      for (int k = 0; k < m; ++k) w.append(k % 2 == 0 ? a : b);
      return w;
    };
    int l = m / 2;
    BraidWord closed1, closed2;
    if (m % 2 == 0) {
      for (int k = 0; k < m * (l + 1); ++k) closed1.push(2);
      closed2 = closed1;
    } else {
      closed1.push(1);
      for (int k = 0; k < m * (l + 1); ++k) closed1.push(2);
      for (int k = 0; k < m * (l + 1); ++k) closed2.push(2);
      closed2.push(1);
    }
    ++rep.checks;
    if (!torus_equal(alternating(t1, t2), closed1, m))
      rep.fail("closed form fails for the alternating t1 product", {{"m", m}});
    ++rep.checks;
    if (!torus_equal(alternating(t2, t1), closed2, m))
      rep.fail("closed form fails for the alternating t2 product", {{"m", m}});
    ++rep.checks;
    if (!torus_equal(alternating(t1, t2), alternating(t2, t1), m))
      rep.fail("braid relation fails between xy and yx", {{"m", m}});
    // x^2 = y^m itself
    BraidWord x2({1, 1}), ym;
    for (int k = 0; k < m; ++k) ym.push(2);
    ++rep.checks;
    if (!torus_equal(x2, ym, m))
      rep.fail("central relation x^2 = y^m fails", {{"m", m}});
    if (m >= 3 && m <= 8) {
      CoxeterContext ctx(standard_graph("I2:" + std::to_string(m)));
      BraidWord b1 = BraidWord::gen(1), b2 = BraidWord::gen(2);
      ++rep.checks;
      if (!is_trivial(BraidWord::braid_relator(b1, b2, m), ctx))
        rep.fail("braid relation fails in the rank-two group", {{"m", m}});
    }
  }
  rep.lines.push_back("m = " + std::to_string(m_lo) + ".." +
                      std::to_string(m_hi) + ": " + std::to_string(rep.checks) +
                      " identities");
  return rep;
}

// ---------------------------------------------------------------------------

VerificationReport verify_garside_selftest(const std::string& type_label,
                                           int cases, const VerifyOptions& o) {
  VerificationReport rep;
  rep.suite = "garside";
  CoxeterContext ctx(standard_graph(type_label), o.word_cap);
  auto edges = ctx.graph().edges();
  int rank = ctx.rank();

  std::vector<nlohmann::ordered_json> payloads(cases);
  auto errs = run_tasks(cases, o.threads, [&](size_t i, std::string& err) {
    std::mt19937_64 rng(mix_seed(o.seed, i));
    std::vector<int> base;
    int len = (int)(rng() % 24);
    for (int k = 0; k < len; ++k) {
      int g = 1 + (int)(rng() % rank);
      base.push_back(rng() % 2 ? g : -g);
    }
    // soundness: splice defining relators and cancelling pairs
    std::vector<int> spiced;
    auto splice = [&] {
      if (rng() % 2 == 0 || edges.empty()) {
        int g = 1 + (int)(rng() % rank);
        spiced.push_back(g);
        spiced.push_back(-g);
      } else {
        auto [a, b, m] = edges[rng() % edges.size()];
        for (int k = 0; k < m; ++k) spiced.push_back(k % 2 ? b + 1 : a + 1);
        for (int k = m - 1; k >= 0; --k) spiced.push_back(-(k % 2 ? a + 1 : b + 1));
      }
    };
    for (int v : base) {
      if (rng() % 3 == 0) splice();
      spiced.push_back(v);
    }
    splice();
    if (!equal(BraidWord(base), BraidWord(spiced), ctx)) {
      err = "soundness fuzz: spliced relators changed the element";
      payloads[i] = {{"word", base}, {"spiced", spiced}};
      return;
    }
    // separation: w != w * g always
    BraidWord w(base), wg(base);
    wg.push(1 + (int)(rng() % rank));
    if (equal(w, wg, ctx)) {
      err = "separation fuzz: w equals w*g";
      payloads[i] = {{"word", base}};
      return;
    }
  });
  rep.checks += 2LL * cases;
  for (int i = 0; i < cases; ++i)
    if (!errs[i].empty() && rep.ok) rep.fail(errs[i], payloads[i]);

  // Delta^2 is central and its normal form is exactly delta = 2
  BraidWord d2;
  for (int r = 0; r < 2; ++r)
    for (int i : ctx.longest_word()) d2.push(i + 1);
  NormalForm nf = normal_form(d2, ctx);
  ++rep.checks;
  if (nf.delta != 2 || !nf.simples.empty())
    rep.fail("normal form of Delta^2 is not (2, [])", {{"type", type_label}});
  for (int g = 1; g <= rank; ++g) {
    BraidWord lhs = d2, rhs = BraidWord::gen(g);
    lhs.append(BraidWord::gen(g));
    rhs.append(d2);
    ++rep.checks;
    if (!equal(lhs, rhs, ctx))
      rep.fail("Delta^2 is not central", {{"type", type_label}, {"gen", g}});
  }
  rep.lines.push_back(type_label + ": " + std::to_string(rep.checks) +
                      " fuzz checks");
  return rep;
}

}  // namespace cxb
