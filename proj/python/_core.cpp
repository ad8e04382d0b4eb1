#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootqca/a2.hpp"
#include "rootqca/graph.hpp"
#include "rootqca/membership.hpp"
#include "rootqca/monoid.hpp"
#include "rootqca/parse.hpp"
#include "rootqca/seed_io.hpp"
#include "rootqca/trace.hpp"

namespace py = pybind11;
using namespace rootqca;

namespace {

py::object big(const mpz_class& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

MutationWord zero_based(const std::vector<int>& word, int n) {
  MutationWord w;
  for (int k : word) {
    if (k < 1 || k > n) throw py::index_error("mutation index out of range: " + std::to_string(k));
    w.push_back(k - 1);
  }
  return w;
}

TorusElement local(const Seed& s, const std::string& expr) { return parse_element(expr, s.local_torus()); }

std::string fmt(const Seed& s, const TorusElement& a) { return format_element(a, s.lambda); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for quantum cluster algebras at roots of unity";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Seed>(m, "Seed")
      .def_static("a2", &make_a2_seed, py::arg("ell"))
      .def_static(
          "from_json",
          [](const std::string& text, long ell) {
            return seed_from_document(seed_document_from_json(nlohmann::json::parse(text)), ell);
          },
          py::arg("text"), py::arg("ell") = 0)
      .def_static(
          "from_file", [](const std::string& path, long ell) { return seed_from_document(load_seed_document(path), ell); },
          py::arg("path"), py::arg("ell") = 0)
      .def_property_readonly("ell", &Seed::ell)
      .def_property_readonly("n", &Seed::n)
      .def_property_readonly("exchangeable", [](const Seed& s) {
        std::vector<int> out;
        for (int k : s.idx.ex) out.push_back(k + 1);
        return out;
      })
      .def_property_readonly("path", [](const Seed& s) {
        std::vector<int> out;
        for (int k : s.path) out.push_back(k + 1);
        return out;
      })
      .def_property_readonly("frame", [](const Seed& s) { return frame_strings(s); })
      .def("summary_json", [](const Seed& s) { return seed_summary(s).dump(); })
      .def("mutate", [](const Seed& s, int k) { return mutate_along(s, zero_based({k}, s.n())); }, py::arg("k"))
      .def(
          "mutate_along", [](const Seed& s, const std::vector<int>& w) { return mutate_along(s, zero_based(w, s.n())); },
          py::arg("word"))
      .def(
          "ell_power_check", [](const Seed& s, int k) { return ell_power_check(s, zero_based({k}, s.n())[0]); },
          py::arg("k"))
      .def("normalize", [](const Seed& s, const std::string& expr) { return fmt(s, local(s, expr)); }, py::arg("expr"))
      .def(
          "multiply",
          [](const Seed& s, const std::string& a, const std::string& b) {
            const auto T = s.local_torus();
            return fmt(s, T.mul(parse_element(a, T), parse_element(b, T)));
          },
          py::arg("a"), py::arg("b"))
      .def(
          "trace",
          [](const Seed& s, const std::string& expr, const std::string& kind) {
            return fmt(s, TraceOperator(s.lambda, parse_trace_kind(kind)).apply(local(s, expr)));
          },
          py::arg("expr"), py::arg("kind") = "reduced")
      .def(
          "ch_check",
          [](const Seed& s, const std::string& expr, const std::string& kind, long degree) {
            const TraceOperator tr(s.lambda, parse_trace_kind(kind));
            return verify_cayley_hamilton(s.local_torus(), local(s, expr), tr, degree > 0 ? degree : tr.default_degree())
                .is_zero;
          },
          py::arg("expr"), py::arg("kind") = "reduced", py::arg("degree") = 0)
      .def(
          "pi_degree", [](const Seed& s) { return big(kernel_mod_ell(s.lambda).pi_degree); })
      .def(
          "exchange_graph_json",
          [](const Seed& s, const std::string& mode, std::size_t max_seeds) {
            ExchangeGraph g(s, parse_graph_mode(mode));
            g.explore(max_seeds);
            return export_json(g);
          },
          py::arg("mode") = "unlabelled", py::arg("max_seeds") = kDefaultMaxSeeds)
      .def(
          "member",
          [](const Seed& s, const std::string& expr, std::size_t max_seeds) {
            if (!s.path.empty()) throw py::value_error("membership is decided from a root seed");
            ExchangeGraph g(s, GraphMode::Unlabelled);
            g.explore(max_seeds);
            if (g.truncated()) throw py::value_error("exchange graph exceeds max_seeds");
            std::vector<int> ids(g.vertices().size());
            for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
            return member_intersection(g, ids, local(s, expr)).member;
          },
          py::arg("expr"), py::arg("max_seeds") = kDefaultMaxSeeds);

  m.def(
      "kernel",
      [](long ell, const std::vector<std::vector<long>>& lambda) {
        const auto k = kernel_mod_ell(Bicharacter(ell, lambda));
        return py::make_tuple(big(k.index), big(k.pi_degree));
      },
      py::arg("ell"), py::arg("lambda_"), "(index of the kernel, PI degree) for a skew form mod ell");

  m.def(
      "classify_monoid",
      [](const std::string& generators) {
        const auto v = classify(MonoidSpec::from_generators(parse_generators(generators)));
        py::dict out;
        out["integrally_convex"] = v.integrally_convex;
        out["integrally_closed"] = v.integrally_closed;
        out["maximal_order"] = v.maximal_order;
        out["witness"] = v.witness ? py::cast(*v.witness) : py::none();
        out["multiplier"] = v.witness ? py::cast(v.multiplier) : py::none();
        out["certificate"] = v.certificate;
        return out;
      },
      py::arg("generators"));

  m.def(
      "a2_suite",
      [](long ell) {
        py::list out;
        for (const auto& c : run_a2_suite(ell).checks) out.append(py::make_tuple(c.name, c.pass, c.skipped));
        return out;
      },
      py::arg("ell"));
}
