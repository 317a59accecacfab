// cxb: cluster exchange graphs and braid presentations for finite
// Coxeter-Dynkin diagrams. See README.md for the schemas.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cxb/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cxb;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

CoxeterGraph parse_graph_spec(const std::string& spec) {
  // "1-2:5,2-3:3"; weight defaults to 3
  std::vector<std::array<int, 3>> edges;
  int maxv = 0;
  std::string item;
  std::stringstream ss(spec);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int a = 0, b = 0, m = 3;
    size_t dash = item.find('-');
    size_t colon = item.find(':');
    if (dash == std::string::npos) throw CLI::ValidationError("bad edge: " + item);
    a = std::stoi(item.substr(0, dash));
    b = std::stoi(item.substr(dash + 1, colon == std::string::npos
                                            ? std::string::npos
                                            : colon - dash - 1));
    if (colon != std::string::npos) m = std::stoi(item.substr(colon + 1));
    maxv = std::max({maxv, a, b});
    edges.push_back({a, b, m});
  }
  CoxeterGraph g(maxv);
  for (auto [a, b, m] : edges) g.set_weight(a - 1, b - 1, m);
  return g;
}

// "H4:E8" or "I2:7:A6" -> (type label, source label or "")
std::pair<std::string, std::string> parse_folding_selector(const std::string& s) {
  size_t pos = s.rfind(':');
  if (pos == std::string::npos) return {s, ""};
  std::string head = s.substr(0, pos), tail = s.substr(pos + 1);
  // the trailing piece of "I2:7" is a number, not a source label
  if (!tail.empty() && std::isdigit((unsigned char)tail[0])) return {s, ""};
  return {head, tail};
}

Folding resolve_folding(const std::string& type_label,
                        const std::string& folding_sel) {
  if (!folding_sel.empty()) {
    auto [t, l] = parse_folding_selector(folding_sel);
    if (l.empty()) return default_folding(t);
    return find_folding(t, l);
  }
  return default_folding(type_label);
}

std::vector<int> parse_mutations(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(s);
  while (ss >> item) {
    for (auto& c : item)
      if (c == ',') c = ' ';
    std::stringstream ss2(item);
    int v;
    while (ss2 >> v) out.push_back(v);
  }
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  int v;
  while (ss >> v) out.push_back(v);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream os(out_path, std::ios::binary);
    os << text;
  }
}

struct VerifyArgs {
  std::string suite = "all";
  std::string type;
  std::string folding;
  std::string m_range = "3..12";
  int len = 8;
  int samples = 100;
  uint64_t seed = 42;
  int threads = 0;
  int radius = -1;
  int cases = 1000;
  std::string out;
};

std::pair<int, int> parse_range(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos) {
    int m = std::stoi(s);
    return {m, m};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

int run_verify(const VerifyArgs& a) {
  VerifyOptions o;
  o.threads = a.threads;
  o.samples = a.samples;
  o.sequence_length = a.len;
  o.seed = a.seed;
  o.radius = a.radius;

  std::vector<std::string> type_list;
  if (!a.type.empty()) {
    type_list = {a.type};
  } else if (!a.folding.empty()) {
    type_list = {parse_folding_selector(a.folding).first};
  }

  std::vector<VerificationReport> reports;
  auto want = [&](const std::string& s) {
    return a.suite == "all" || a.suite == s;
  };

  if (want("lem-surj")) {
    auto [lo, hi] = parse_range(a.m_range);
    reports.push_back(verify_lem_surj(lo, hi, o));
  }
  if (want("local-twist")) {
    auto types = type_list.empty()
                     ? std::vector<std::string>{"B3", "F4", "G2", "H3", "H4"}
                     : type_list;
    for (const auto& t : types)
      reports.push_back(verify_local_twist_decomposition(
          resolve_folding(t, a.folding), o));
  }
  if (want("twist")) {
    auto types = type_list.empty()
                     ? std::vector<std::string>{"A3", "B3", "G2", "H3"}
                     : type_list;
    for (const auto& t : types) {
      Folding f = resolve_folding(t, a.folding);
      CegOptions copt;
      copt.threads = a.threads;
      ExchangeGraph g = build_ceg(f, copt);
      CoxeterContext ctx(f.target, o.word_cap);
      VerificationReport rep;
      rep.suite = "twist";
      TwistLabeling lab = build_twist_labeling(g, ctx, rep, o);
      rep.lines.insert(rep.lines.begin(),
                       t + " via " + f.source_type.label + ":");
      reports.push_back(rep);
      if (rep.ok) reports.push_back(verify_presentations(g, lab, ctx, o));
    }
  }
  if (want("theta")) {
    auto types = type_list.empty()
                     ? std::vector<std::string>{"A3", "B3", "G2", "H3"}
                     : type_list;
    for (const auto& t : types)
      reports.push_back(verify_theta_invariance(resolve_folding(t, a.folding), o));
  }
  if (want("iota")) {
    auto types = type_list.empty()
                     ? std::vector<std::string>{"B3", "F4", "G2", "H2", "H3", "H4"}
                     : type_list;
    for (const auto& t : types)
      reports.push_back(verify_iota(resolve_folding(t, a.folding), o));
  }
  if (want("diagram")) {
    auto types = type_list.empty()
                     ? std::vector<std::string>{"B3", "G2", "H3"}
                     : type_list;
    VerifyOptions od = o;
    if (a.suite == "all") od.samples = std::min(o.samples, 11);
    for (const auto& t : types)
      reports.push_back(verify_diagram(resolve_folding(t, a.folding), od));
  }
  if (want("garside")) {
    auto types = type_list.empty()
                     ? std::vector<std::string>{"A3", "B3", "H3", "I2:7"}
                     : type_list;
    for (const auto& t : types)
      reports.push_back(verify_garside_selftest(t, a.cases, o));
  }
  if (reports.empty()) {
    std::cerr << "unknown suite: " << a.suite << "\n";
    return kExitUsage;
  }

  bool ok = true;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok;
    all.push_back(r.to_json());
    std::cout << (r.ok ? "pass" : "FAIL") << " [" << r.suite << "] ";
    for (const auto& l : r.lines) std::cout << l << " ";
    if (!r.ok) std::cout << "-- " << r.failure;
    std::cout << "\n";
    if (!r.ok) std::cout << "  counterexample: " << r.counterexample.dump() << "\n";
  }
  if (!a.out.empty()) {
    nlohmann::ordered_json j;
    j["seed"] = a.seed;
    j["suite"] = a.suite;
    j["reports"] = all;
    std::ofstream os(a.out, std::ios::binary);
    os << j.dump(1) << "\n";
  }
  std::cout << (ok ? "all checks passed" : "VERIFICATION FAILED") << "\n";
  return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster exchange graphs and braid presentations of finite "
               "Coxeter-Dynkin diagrams"};
  app.require_subcommand(1);

  // classify
  std::string graph_spec, graph_json;
  auto* c_classify = app.add_subcommand("classify", "match a weighted graph "
                                        "against the finite list");
  c_classify->add_option("--graph", graph_spec, "edge list, e.g. 1-2:5,2-3:3");
  c_classify->add_option("--json", graph_json, "graph as a JSON file");

  // ceg
  std::string type, folding_sel, format = "text", out_path, orient = "ascending";
  bool oriented = false, faces = false;
  int threads = 0;
  auto* c_ceg = app.add_subcommand("ceg", "build the exchange graph and report "
                                   "vertex, edge and face counts");
  c_ceg->add_option("--type", type, "type label, e.g. A3, H4, I2:7")->required();
  c_ceg->add_option("--folding", folding_sel, "unfolding, e.g. H4:E8");
  c_ceg->add_option("--format", format, "text, dot or json");
  c_ceg->add_option("--out", out_path, "write output to a file");
  c_ceg->add_option("--orient", orient, "ascending or descending initial arrows");
  c_ceg->add_option("--threads", threads, "worker threads (0 = default)");
  c_ceg->add_flag("--oriented", oriented, "directed dot output");
  c_ceg->add_flag("--faces", faces, "include polygon faces in exports");

  // presentation
  std::string mutations;
  auto* c_pres = app.add_subcommand("presentation", "presentation of the "
                                    "quiver reached by a mutation sequence");
  c_pres->add_option("--type", type, "type label")->required();
  c_pres->add_option("--folding", folding_sel, "unfolding");
  c_pres->add_option("--mutations", mutations, "vertex sequence, e.g. \"1 2 1\"");
  c_pres->add_option("--format", format, "text or json");
  c_pres->add_option("--out", out_path, "write output to a file");

  // wp
  std::string lhs, rhs;
  auto* c_wp = app.add_subcommand("wp", "decide equality of two braid words");
  c_wp->add_option("--type", type, "type label")->required();
  c_wp->add_option("--lhs", lhs, "word, signed 1-based letters")->required();
  c_wp->add_option("--rhs", rhs, "word, signed 1-based letters")->required();

  // verify
  VerifyArgs va;
  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->add_option("--suite", va.suite,
                       "lem-surj, local-twist, twist, theta, iota, diagram, "
                       "garside or all");
  c_verify->add_option("--type", va.type, "restrict to one type");
  c_verify->add_option("--folding", va.folding, "unfolding selector");
  c_verify->add_option("--m", va.m_range, "m range for lem-surj, e.g. 3..12");
  c_verify->add_option("--len", va.len, "mutation sequence length bound");
  c_verify->add_option("--samples", va.samples, "random samples");
  c_verify->add_option("--seed", va.seed, "RNG seed (echoed in reports)");
  c_verify->add_option("--threads", va.threads, "worker threads");
  c_verify->add_option("--radius", va.radius, "labeling ball radius, -1 = all");
  c_verify->add_option("--cases", va.cases, "fuzz cases for the garside suite");
  c_verify->add_option("--out", va.out, "write the JSON report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_classify) {
      CoxeterGraph g;
      if (!graph_json.empty()) {
        std::ifstream is(graph_json);
        if (!is) throw std::runtime_error("cannot open " + graph_json);
        nlohmann::json j;
        is >> j;
        g = graph_from_json(j);
      } else if (!graph_spec.empty()) {
        g = parse_graph_spec(graph_spec);
      } else {
        std::cerr << "classify: --graph or --json required\n";
        return kExitUsage;
      }
      std::cout << classify_finite(g).label << "\n";
      return 0;
    }

    if (*c_ceg) {
      Folding f = resolve_folding(type, folding_sel);
      CegOptions opt;
      opt.threads = threads;
      opt.orientation = orient == "descending" ? Orientation::descending
                                               : Orientation::ascending;
      ExchangeGraph g = build_ceg(f, opt);
      auto polys = enumerate_polygons(g);
      if (format == "dot") {
        emit(ceg_to_dot(g, oriented, faces ? &polys : nullptr), out_path);
      } else if (format == "json") {
        nlohmann::ordered_json j;
        j["type"] = f.target_type.label;
        j["folding"] = f.source_type.label;
        j["orientation"] = orient;
        j["graph"] = ceg_to_json(g, &polys);
        emit(j.dump(1) + "\n", out_path);
      } else {
        std::map<int, int> hist;
        for (const auto& p : polys) ++hist[(int)p.vertices.size()];
        std::ostringstream os;
        os << f.target_type.label << " via " << f.source_type.label << ": "
           << g.vertex_count() << " vertices, " << g.edge_count()
           << " unoriented edges, " << polys.size() << " polygons\nfaces:";
        for (auto [size, count] : hist) os << " " << count << "x" << size << "-gon";
        os << "\n";
        emit(os.str(), out_path);
      }
      return 0;
    }

    if (*c_pres) {
      Folding f = resolve_folding(type, folding_sel);
      Seed s = initial_seed(f);
      for (int v : parse_mutations(mutations)) {
        if (v < 1 || v > f.target.rank())
          throw std::invalid_argument("mutation vertex out of range");
        s = weighted_mutate(f, s, v - 1);
      }
      Presentation p = presentation_of_quiver(fold_quiver(f, s.B));
      if (format == "json")
        emit(presentation_to_json(p).dump(1) + "\n", out_path);
      else
        emit(presentation_text(p) + "\n", out_path);
      return 0;
    }

    if (*c_wp) {
      CoxeterContext ctx(standard_graph(type));
      bool eq = equal(BraidWord(parse_word(lhs)), BraidWord(parse_word(rhs)), ctx);
      std::cout << (eq ? "equal" : "unequal") << "\n";
      return eq ? 0 : kExitVerifyFailure;
    }

    if (*c_verify) {
#ifdef _OPENMP
      if (va.threads > 0) omp_set_num_threads(va.threads);
#endif
      return run_verify(va);
    }
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
