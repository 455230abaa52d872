#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bookemb/encoder.hpp"
#include "bookemb/family.hpp"
#include "bookemb/layout.hpp"
#include "bookemb/solver_io.hpp"
#include "bookemb/text_io.hpp"

namespace py = pybind11;
using namespace bookemb;

namespace {

std::string violation_line(const Violation& v) {
  std::string s = to_string(v.kind);
  for (const Edge& e : v.edges)
    s += " (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  if (!v.note.empty()) s += " " + v.note;
  return s;
}

RestrictionProfile profile_from_args(const std::string& profile, const std::string& symmetry,
                                     const py::object& subproblem) {
  RestrictionProfile prof;
  if (profile == "fact1")
    prof.fact1 = true;
  else if (profile == "fact1-linear")
    prof.fact1_linear_adjacent = true;
  else if (profile == "fact2")
    prof.fact2 = true;
  else if (profile != "none")
    throw Error(ErrorKind::UsageError, "unknown profile '" + profile + "'");
  if (symmetry == "all") {
    prof.symmetry_first_vertex = prof.symmetry_terminal_order = prof.symmetry_reversal = true;
    prof.pin_first_edge_page = prof.pin_second_edge_two_pages = prof.k4_not_monochromatic = true;
  } else if (symmetry != "none") {
    throw Error(ErrorKind::UsageError, "symmetry must be 'none' or 'all' here");
  }
  if (!subproblem.is_none()) {
    SubproblemSpec spec;
    spec.between = subproblem.cast<std::vector<std::int32_t>>();
    prof.subproblem = spec;
  }
  return prof;
}

}  // namespace

PYBIND11_MODULE(_bookemb, m) {
  m.doc() = "planar book-embedding toolkit (text-based core bindings)";

  py::register_exception<Error>(m, "ToolkitError");

  m.def(
      "gadget",
      [](const std::string& family, int k, int n, long long max_vertices) {
        GadgetGraph g;
        if (family == "qk")
          g = build_qk(k);
        else if (family == "qk-contracted")
          g = build_qk_contracted(k);
        else if (family == "gn")
          g = build_base_gn(k, n);
        else if (family == "final")
          g = build_final_g(k, n, (std::size_t)max_vertices);
        else
          throw Error(ErrorKind::UsageError, "unknown family '" + family + "'");
        return write_graph_text(g.graph, g.name);
      },
      py::arg("family"), py::arg("k"), py::arg("n") = 1, py::arg("max_vertices") = 1000000,
      "Build a family graph and return its text form.");

  m.def(
      "graph_stats",
      [](const std::string& text) {
        NamedGraph ng = parse_graph_text(text);
        py::dict d;
        d["name"] = ng.name;
        d["vertices"] = ng.graph.num_vertices();
        d["edges"] = ng.graph.num_edges();
        d["faces"] = ng.graph.num_faces();
        d["maximal_planar"] = is_maximal_planar(ng.graph);
        try {
          GadgetGraph gg = gadget_from_graph(ng);
          d["poles"] = py::make_tuple(gg.pole_a, gg.pole_b);
          d["terminals"] = gg.terminals;
          d["satellite_edges"] = gg.satellite_edges.size();
        } catch (const Error&) {
        }
        return d;
      },
      py::arg("graph_text"), "Structural statistics of a graph text.");

  m.def(
      "encode",
      [](const std::string& graph_text, int pages, const std::string& profile,
         const std::string& symmetry, const py::object& subproblem) {
        NamedGraph ng = parse_graph_text(graph_text);
        Encoded enc = encode(ng.graph, pages, profile_from_args(profile, symmetry, subproblem));
        std::ostringstream cnf;
        write_dimacs(enc.cnf, cnf);
        return py::make_tuple(cnf.str(), write_varmap_text(enc.vars));
      },
      py::arg("graph_text"), py::arg("pages"), py::arg("profile") = "none",
      py::arg("symmetry") = "none", py::arg("subproblem") = py::none(),
      "Encode the p-page question; returns (dimacs_text, map_text).");

  m.def(
      "solve",
      [](const std::string& cnf_text, const py::object& map_text, double timeout,
         const py::object& backend) {
        BackendConfig cfg;
        if (!backend.is_none()) {
          cfg.command_template = backend.cast<std::string>();
        } else if (auto found = discover_backend()) {
          cfg.command_template = *found;
        } else {
          throw Error(ErrorKind::SpawnFailure, "no SAT backend found; set SAT_SOLVER_CMD");
        }
        cfg.timeout_seconds = timeout;
        CnfFormula cnf = parse_dimacs_text(cnf_text);
        SolveOutcome oc;
        {
          py::gil_scoped_release release;
          oc = run_backend(cnf, cfg);
        }
        py::dict d;
        d["status"] = to_string(oc.status);
        d["seconds"] = oc.wall_seconds;
        if (!oc.reason.empty()) d["reason"] = oc.reason;
        if (oc.status == SolveStatus::Sat && !map_text.is_none()) {
          VarMap vm = parse_varmap_text(map_text.cast<std::string>());
          d["embedding"] = write_embedding_text(decode_model(vm, oc.model));
        }
        return d;
      },
      py::arg("cnf_text"), py::arg("map_text") = py::none(), py::arg("timeout") = 60.0,
      py::arg("backend") = py::none(),
      "Run the SAT backend; returns {status, seconds[, reason][, embedding]}.");

  m.def(
      "verify",
      [](const std::string& graph_text, const std::string& embedding_text) {
        NamedGraph ng = parse_graph_text(graph_text);
        BookEmbedding emb = parse_embedding_text(embedding_text);
        ValidationReport rep = validate_embedding(ng.graph, emb);
        py::dict d;
        d["valid"] = rep.valid;
        py::list vs;
        for (const auto& v : rep.violations) vs.append(violation_line(v));
        d["violations"] = vs;
        return d;
      },
      py::arg("graph_text"), py::arg("embedding_text"),
      "Validate an embedding against a graph.");

  m.def(
      "forbidden_scan",
      [](const std::string& embedding_text) {
        BookEmbedding emb = parse_embedding_text(embedding_text);
        ForbiddenScanReport rep = forbidden_scan(emb);
        py::dict d;
        py::list vs, ns;
        for (const auto& v : rep.violations) vs.append(violation_line(v));
        for (const auto& v : rep.near_misses) ns.append(violation_line(v));
        d["violations"] = vs;
        d["near_misses"] = ns;
        return d;
      },
      py::arg("embedding_text"),
      "Scan a 3-page embedding for the three forbidden configurations.");

  m.def(
      "extract_pattern",
      [](const std::vector<VertexId>& order, const std::vector<std::pair<VertexId, VertexId>>& pairs,
         int r) {
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (auto& [u, v] : pairs) es.emplace_back(u, v);
        ExtractedConfig cfg = extract_config(order, es, r);
        py::dict d;
        d["pattern"] = to_string(cfg.kind);
        py::list sel;
        for (const Edge& e : cfg.edges) sel.append(py::make_tuple(e.u, e.v));
        d["pairs"] = sel;
        return d;
      },
      py::arg("order"), py::arg("pairs"), py::arg("r"),
      "Extract a size-r rainbow, twist or necklace from >= r^3 independent pairs.");
}
