// rootqca: command-line front end. All output is JSON on stdout except the
// a2-demo table and DOT graphs. Exit codes: 0 success, 1 a requested check
// failed, 2 bad input or internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "rootqca/a2.hpp"
#include "rootqca/graph.hpp"
#include "rootqca/membership.hpp"
#include "rootqca/monoid.hpp"
#include "rootqca/parse.hpp"
#include "rootqca/sample.hpp"
#include "rootqca/seed_io.hpp"
#include "rootqca/trace.hpp"

using json = nlohmann::json;
using namespace rootqca;

namespace {

struct Options {
  long ell = 3;
  std::string seed_file;
  std::string word;
  std::string theta = "all";
  std::vector<std::string> elements;
  std::size_t bound = kDefaultMaxSeeds;
  std::string mode = "unlabelled";
  std::uint64_t rng_seed = 1;
  std::string out;
  std::string kind = "reduced";
  long degree = 0;
  int count = 0;
  std::string gens;
  std::vector<std::string> ineqs;
  int rank = 0;
  std::string lambda;
  std::string test = "intersection";
  std::string format = "json";
  bool as_json = false;
};

Seed load_seed(const Options& o, const CLI::App& sub) {
  if (o.seed_file.empty()) return make_a2_seed(o.ell);
  const long override = sub.count("--ell") ? o.ell : 0;
  return seed_from_document(load_seed_document(o.seed_file), override);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::invalid_argument("cannot write '" + o.out + "'");
  f << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

std::vector<MutationWord> parse_theta(const std::string& text, int n) {
  std::vector<MutationWord> words;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) words.push_back(parse_word(tok, n));
  return words;
}

json failure_json(const DivisionFailure& f) {
  return {{"path", word_to_json(f.path)}, {"direction", f.k + 1}, {"m", f.m}, {"dividend", f.dividend},
          {"divisor", f.divisor}};
}

int cmd_mutate(const Options& o, const CLI::App& sub) {
  const Seed root = load_seed(o, sub);
  const Seed s = mutate_along(root, parse_word(o.word, root.n()));
  json j = seed_summary(s);
  j["compatible"] = seed_compatible(s);
  j["quasi_commuting"] = frame_quasi_commutes(s);
  emit(o, json{{"command", "mutate"}, {"seed", j}});
  return 0;
}

int cmd_graph(const Options& o, const CLI::App& sub) {
  ExchangeGraph g(load_seed(o, sub), parse_graph_mode(o.mode));
  g.explore(o.bound);
  if (o.format == "dot") {
    emit(o, export_dot(g));
  } else if (o.format == "json") {
    emit(o, json::parse(export_json(g)).dump(2) + "\n");
  } else {
    throw std::invalid_argument("format must be json or dot");
  }
  return 0;
}

int cmd_trace(const Options& o, const CLI::App& sub) {
  const Seed root = load_seed(o, sub);
  const Seed s = mutate_along(root, parse_word(o.word, root.n()));
  const QuantumTorus T = s.local_torus();
  const TraceOperator tr(s.lambda, parse_trace_kind(o.kind));
  json rows = json::array();
  for (const auto& text : o.elements) {
    const TorusElement a = parse_element(text, T);
    rows.push_back({{"element", format_element(a, s.lambda)}, {"trace", format_element(tr.apply(a), s.lambda)}});
  }
  emit(o, json{{"command", "trace"},
               {"kind", to_string(tr.kind())},
               {"path", word_to_json(s.path)},
               {"pi_degree", tr.pi_degree().get_str()},
               {"results", rows}});
  return 0;
}

int cmd_ch_check(const Options& o, const CLI::App& sub) {
  const Seed root = load_seed(o, sub);
  const Seed s = mutate_along(root, parse_word(o.word, root.n()));
  const QuantumTorus T = s.local_torus();
  const TraceOperator tr(s.lambda, parse_trace_kind(o.kind));
  const long degree = o.degree > 0 ? o.degree : tr.default_degree();
  std::vector<TorusElement> elems;
  for (const auto& text : o.elements) elems.push_back(parse_element(text, T));
  std::mt19937_64 rng(o.rng_seed);
  for (int i = 0; i < o.count; ++i) elems.push_back(random_element(T, rng, SampleShape{}));
  if (elems.empty()) throw std::invalid_argument("ch-check: give --element or --count");
  bool all = true;
  json rows = json::array();
  for (const auto& a : elems) {
    const CharPolyReport rep = verify_cayley_hamilton(T, a, tr, degree);
    all = all && rep.is_zero;
    json psi = json::array(), sigma = json::array();
    for (const auto& p : rep.psi) psi.push_back(format_element(p, s.lambda));
    for (const auto& x : rep.sigma) sigma.push_back(format_element(x, s.lambda));
    rows.push_back({{"element", format_element(a, s.lambda)},
                    {"pass", rep.is_zero},
                    {"psi", psi},
                    {"sigma", sigma},
                    {"residual", rep.residual ? format_element(*rep.residual, s.lambda) : "0"}});
  }
  emit(o, json{{"command", "ch-check"},
               {"kind", to_string(tr.kind())},
               {"degree", degree},
               {"pass", all},
               {"results", rows}});
  return all ? 0 : 1;
}

int cmd_member(const Options& o, const CLI::App& sub) {
  const Seed root = load_seed(o, sub);
  ExchangeGraph g(root, GraphMode::Labelled);
  g.explore(o.bound);
  const ThetaSet theta = o.theta == "all" ? theta_all(g) : theta_from_words(g, parse_theta(o.theta, root.n()));
  if (o.elements.empty()) throw std::invalid_argument("member: give --element");
  bool all = true;
  json rows = json::array();
  for (const auto& text : o.elements) {
    const TorusElement u = parse_element(text, *root.ambient);
    MembershipReport rep;
    if (o.test == "intersection")
      rep = member_intersection(g, theta.vertices, u);
    else if (o.test == "central")
      rep = member_central_subalgebra(g, theta.vertices, u);
    else if (o.test == "center")
      rep = center_test(g, theta.vertices, u);
    else
      throw std::invalid_argument("test must be intersection, central or center");
    all = all && rep.member;
    json seeds = json::array();
    for (const auto& sv : rep.seeds) {
      const Seed& s = g.vertices()[sv.vertex];
      json js{{"path", word_to_json(sv.path)}, {"member", sv.member}};
      if (sv.coords) js["coords"] = format_element(*sv.coords, s.lambda);
      if (sv.failure) js["failure"] = failure_json(*sv.failure);
      if (!sv.reason.empty()) js["reason"] = sv.reason;
      seeds.push_back(js);
    }
    rows.push_back({{"element", text}, {"member", rep.member}, {"seeds", seeds}});
  }
  emit(o, json{{"command", "member"},
               {"test", o.test},
               {"theta_connected", theta.connected},
               {"graph_truncated", g.truncated()},
               {"member", all},
               {"results", rows}});
  return all ? 0 : 1;
}

std::vector<std::vector<long>> parse_matrix(const std::string& text) {
  std::vector<std::vector<long>> m;
  for (const auto& row : parse_generators(text)) m.push_back(row);
  return m;
}

int cmd_classify(const Options& o) {
  MonoidSpec m;
  if (!o.gens.empty() && !o.ineqs.empty()) throw std::invalid_argument("classify-monoid: give --gens or --ineq, not both");
  if (!o.gens.empty()) {
    m = MonoidSpec::from_generators(parse_generators(o.gens));
  } else if (!o.ineqs.empty()) {
    if (o.rank <= 0) throw std::invalid_argument("classify-monoid: --ineq needs --rank");
    std::vector<Halfspace> hs;
    for (const auto& t : o.ineqs) hs.push_back(parse_halfspace(t, o.rank));
    m = MonoidSpec::from_halfspaces(o.rank, hs);
  } else {
    throw std::invalid_argument("classify-monoid: give --gens or --ineq");
  }
  const MonoidVerdict v = classify(m);
  json j{{"command", "classify-monoid"},
         {"rank", m.n},
         {"integrally_convex", v.integrally_convex},
         {"integrally_closed", v.integrally_closed},
         {"maximal_order", v.maximal_order},
         {"certificate", v.certificate}};
  if (v.witness) {
    j["witness"] = *v.witness;
    j["multiplier"] = v.multiplier;
  }
  if (!m.generator_form()) j["redundant"] = v.redundant;
  if (m.generator_form()) {
    const IntMatrix B = group_closure(m);
    json basis = json::array();
    for (int c = 0; c < B.cols(); ++c) basis.push_back(B.col(c));
    j["group_basis"] = basis;
  }
  if (!o.lambda.empty()) j["ch_degree"] = ch_degree_monomial(m, Bicharacter(o.ell, parse_matrix(o.lambda))).get_str();
  emit(o, j);
  return 0;
}

int cmd_a2(const Options& o) {
  const A2Report rep = run_a2_suite(o.ell);
  if (o.as_json) {
    json rows = json::array();
    for (const auto& c : rep.checks)
      rows.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"skipped", c.skipped},
                      {"detail", c.detail},
                      {"seconds", c.seconds}});
    emit(o, json{{"command", "a2-demo"}, {"ell", rep.ell}, {"pass", rep.all_pass()}, {"checks", rows}});
  } else {
    std::ostringstream os;
    os << "A2 at ell = " << rep.ell << "\n";
    for (const auto& c : rep.checks) {
      os << "  " << std::left << std::setw(6) << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << std::setw(20)
         << c.name << c.detail << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)\n";
    }
    os << (rep.all_pass() ? "all checks pass\n" : "some checks FAILED\n");
    emit(o, os.str());
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in root of unity quantum cluster algebras"};
  app.require_subcommand(1);
  Options o;

  auto seed_opts = [&](CLI::App* s) {
    s->add_option("--ell", o.ell, "Order of the root of unity z")->check(CLI::PositiveNumber);
    s->add_option("--seed-file", o.seed_file, "JSON seed document (default: A2)");
    s->add_option("--out", o.out, "Write output to this file");
  };

  auto* mutate = app.add_subcommand("mutate", "Apply a mutation word and print the seed");
  seed_opts(mutate);
  mutate->add_option("--word", o.word, "Comma-separated 1-based directions");

  auto* graph = app.add_subcommand("graph", "Explore the exchange graph");
  seed_opts(graph);
  graph->add_option("--mode", o.mode, "labelled or unlabelled");
  graph->add_option("--bound", o.bound, "Maximum number of seeds");
  graph->add_option("--format", o.format, "json or dot");

  auto* trace = app.add_subcommand("trace", "Apply a trace to elements in seed coordinates");
  seed_opts(trace);
  trace->add_option("--word", o.word, "Seed at which the elements are given");
  trace->add_option("--element", o.elements, "Element, e.g. \"x1^-1 + z*x1^-1*x2\"")->required();
  trace->add_option("--kind", o.kind, "regular, regular-center, reduced or standard");

  auto* ch = app.add_subcommand("ch-check", "Verify the Cayley-Hamilton identity");
  seed_opts(ch);
  ch->add_option("--word", o.word, "Seed at which the elements are given");
  ch->add_option("--element", o.elements, "Element to test");
  ch->add_option("--count", o.count, "Number of random elements");
  ch->add_option("--rng-seed", o.rng_seed, "Seed for random elements");
  ch->add_option("--kind", o.kind, "Trace kind");
  ch->add_option("--degree", o.degree, "Degree (default: from the trace kind)");

  auto* member = app.add_subcommand("member", "Membership in intersections over seeds");
  seed_opts(member);
  member->add_option("--element", o.elements, "Element in initial coordinates")->required();
  member->add_option("--theta", o.theta, "all, or ';'-separated words ('-' is the root)");
  member->add_option("--test", o.test, "intersection, central or center");
  member->add_option("--bound", o.bound, "Maximum number of seeds");

  auto* mon = app.add_subcommand("classify-monoid", "Classify a submonoid of Z^N");
  mon->add_option("--gens", o.gens, "Generators, e.g. \"1,0;0,1\"");
  mon->add_option("--ineq", o.ineqs, "Inequality, e.g. \"x1+x2>0\"");
  mon->add_option("--rank", o.rank, "N for halfspace systems");
  mon->add_option("--lambda", o.lambda, "Bicharacter rows for the CH degree, e.g. \"0,1;-1,0\"");
  mon->add_option("--ell", o.ell, "Order of z for --lambda")->check(CLI::PositiveNumber);
  mon->add_option("--out", o.out, "Write output to this file");

  auto* a2 = app.add_subcommand("a2-demo", "Run the A2 checks");
  a2->add_option("--ell", o.ell, "Order of z")->check(CLI::PositiveNumber);
  a2->add_flag("--json", o.as_json, "Print JSON instead of a table");
  a2->add_option("--out", o.out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*mutate) return cmd_mutate(o, *mutate);
    if (*graph) return cmd_graph(o, *graph);
    if (*trace) return cmd_trace(o, *trace);
    if (*ch) return cmd_ch_check(o, *ch);
    if (*member) return cmd_member(o, *member);
    if (*mon) return cmd_classify(o);
    if (*a2) return cmd_a2(o);
  } catch (const ParseError& e) {
    std::cout << json{{"error", e.what()}, {"position", e.position}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
