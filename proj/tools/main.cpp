#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bookemb/encoder.hpp"
#include "bookemb/family.hpp"
#include "bookemb/layout.hpp"
#include "bookemb/solver_io.hpp"
#include "bookemb/text_io.hpp"

using namespace bookemb;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SpawnFailure:
    case ErrorKind::MalformedOutput:
      return 3;
    default:
      return 2;
  }
}

std::vector<std::int32_t> parse_index_list(const std::string& s) {
  std::vector<std::int32_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::UsageError, "bad index list element '" + tok + "'");
    }
  }
  return out;
}

RestrictionProfile build_profile(const std::string& profile, const std::string& symmetry) {
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
    std::stringstream in(symmetry);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok == "first-vertex") prof.symmetry_first_vertex = true;
      else if (tok == "terminal-order") prof.symmetry_terminal_order = true;
      else if (tok == "reversal") prof.symmetry_reversal = true;
      else if (tok == "first-edge") prof.pin_first_edge_page = true;
      else if (tok == "second-edge") prof.pin_second_edge_two_pages = true;
      else if (tok == "k4") prof.k4_not_monochromatic = true;
      else throw Error(ErrorKind::UsageError, "unknown symmetry rule '" + tok + "'");
    }
  }
  return prof;
}

std::string job_name(const SubproblemSpec& s) {
  if (s.between.empty()) return "between-none";
  std::string n = "between";
  for (std::int32_t i : s.between) n += "-" + std::to_string(i);
  return n;
}

BackendConfig make_backend(const std::string& backend, double timeout, int jobs) {
  BackendConfig cfg;
  if (!backend.empty()) {
    cfg.command_template = backend;
  } else if (auto found = discover_backend()) {
    cfg.command_template = *found;
  } else {
    throw Error(ErrorKind::SpawnFailure, "no SAT backend found; set SAT_SOLVER_CMD");
  }
  cfg.timeout_seconds = timeout;
  cfg.parallel_jobs = jobs;
  return cfg;
}

// --- gen -----------------------------------------------------------------

struct GenOpts {
  std::string family, out;
  int k = 0, n = 1;
  bool contract = false;
  long long max_vertices = 1000000;
};

int cmd_gen(const GenOpts& o) {
  std::string fam = o.family;
  if (fam == "qk" && o.contract) fam = "qk-contracted";
  GadgetGraph g;
  if (fam == "qk")
    g = build_qk(o.k);
  else if (fam == "qk-contracted")
    g = build_qk_contracted(o.k);
  else if (fam == "gn")
    g = build_base_gn(o.k, o.n);
  else if (fam == "final")
    g = build_final_g(o.k, o.n, (std::size_t)o.max_vertices);
  else
    throw Error(ErrorKind::UsageError, "unknown family '" + o.family + "'");
  write_file(o.out, write_graph_text(g.graph, g.name));
  std::cout << g.name << " vertices " << g.graph.num_vertices() << " edges "
            << g.graph.num_edges() << "\n";
  return 0;
}

// --- encode --------------------------------------------------------------

struct EncodeOpts {
  std::string graph, out, map;
  int pages = 0;
  std::string profile = "none", symmetry = "none", subproblem;
  bool have_subproblem = false;
};

int cmd_encode(const EncodeOpts& o) {
  NamedGraph ng = parse_graph_text(read_file(o.graph));
  RestrictionProfile prof = build_profile(o.profile, o.symmetry);
  if (o.have_subproblem) {
    SubproblemSpec spec;
    if (o.subproblem != "none") spec.between = parse_index_list(o.subproblem);
    prof.subproblem = spec;
  }
  Encoded enc = encode(ng.graph, o.pages, prof);
  write_dimacs_file(enc.cnf, o.out);
  std::string map_path = o.map.empty() ? o.out + ".map" : o.map;
  write_file(map_path, write_varmap_text(enc.vars));
  std::cout << "vars " << enc.cnf.num_vars << " clauses " << enc.cnf.num_clauses() << "\n";
  return 0;
}

// --- solve ---------------------------------------------------------------

struct SolveOpts {
  std::string target, map, out, backend, expect;
  double timeout = 3600;
  int jobs = 1;
};

struct SplitDir {
  CnfFormula base;
  std::vector<SplitJob> jobs;
  std::string map_path;
};

SplitDir load_split_dir(const std::string& dir) {
  SplitDir sd;
  std::string text = read_file(dir + "/manifest.txt");
  std::istringstream in(text);
  std::string line, base_file;
  std::size_t line_no = 0;
  std::vector<std::pair<std::string, std::string>> job_files;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "split") continue;  // informational header
    if (tag == "base") {
      if (!(ls >> base_file))
        throw Error(ErrorKind::ParseError, "manifest line " + std::to_string(line_no));
    } else if (tag == "map") {
      std::string f;
      if (!(ls >> f))
        throw Error(ErrorKind::ParseError, "manifest line " + std::to_string(line_no));
      sd.map_path = dir + "/" + f;
    } else if (tag == "job") {
      std::string name, file;
      if (!(ls >> name >> file))
        throw Error(ErrorKind::ParseError, "manifest line " + std::to_string(line_no));
      job_files.emplace_back(name, file);
    } else {
      throw Error(ErrorKind::ParseError, "manifest: unknown record '" + tag + "'");
    }
  }
  if (base_file.empty()) throw Error(ErrorKind::ParseError, "manifest: missing base record");
  if (job_files.empty()) throw Error(ErrorKind::ParseError, "manifest: no jobs");
  sd.base = parse_dimacs_file(dir + "/" + base_file);
  for (auto& [name, file] : job_files) {
    CnfFormula extra = parse_dimacs_file(dir + "/" + file);
    if (extra.num_vars != sd.base.num_vars)
      throw Error(ErrorKind::ParseError, "job " + name + " declares a different variable count");
    SplitJob job;
    job.name = name;
    for (std::size_t c = 0; c + 1 < extra.clause_starts.size(); ++c)
      job.extra_clauses.emplace_back(extra.lits.begin() + extra.clause_starts[c],
                                     extra.lits.begin() + extra.clause_starts[c + 1]);
    sd.jobs.push_back(std::move(job));
  }
  return sd;
}

int cmd_solve(const SolveOpts& o) {
  BackendConfig cfg = make_backend(o.backend, o.timeout, o.jobs);
  SolveOutcome oc;
  std::string map_path = o.map;
  if (std::filesystem::is_directory(o.target)) {
    SplitDir sd = load_split_dir(o.target);
    if (map_path.empty()) map_path = sd.map_path;
    SplitResult sr = solve_split(sd.base, sd.jobs, cfg, o.target + "/logs");
    std::cout << sr.summary;
    oc = std::move(sr.aggregate);
  } else {
    CnfFormula cnf = parse_dimacs_file(o.target);
    if (map_path.empty()) {
      std::string cand = o.target + ".map";
      if (std::filesystem::exists(cand)) map_path = cand;
    }
    oc = run_backend_at(cnf, o.target, cfg);
  }

  std::cout << "status " << to_string(oc.status);
  if (oc.status == SolveStatus::Unknown && !oc.reason.empty()) std::cout << " (" << oc.reason << ")";
  std::cout << "\n";
  std::printf("seconds %.3f\n", oc.wall_seconds);

  if (oc.status == SolveStatus::Sat && !o.out.empty()) {
    if (map_path.empty())
      throw Error(ErrorKind::UsageError, "decoding an embedding needs --map");
    VarMap vm = parse_varmap_text(read_file(map_path));
    BookEmbedding emb = decode_model(vm, oc.model);
    write_file(o.out, write_embedding_text(emb));
    std::cout << "embedding " << o.out << "\n";
  }

  if (!o.expect.empty()) {
    if (oc.status == SolveStatus::Unknown) return 3;
    bool want_sat = o.expect == "sat";
    if ((oc.status == SolveStatus::Sat) != want_sat) {
      std::cout << "expected " << o.expect << "\n";
      return 1;
    }
    return 0;
  }
  return oc.status == SolveStatus::Unknown ? 3 : 0;
}

// --- split ---------------------------------------------------------------

struct SplitOpts {
  std::string graph, out_dir;
  int pages = 0, max_between = 0;
  std::string profile = "none", symmetry = "none";
  bool dedup_reflection = false;
};

int cmd_split(const SplitOpts& o) {
  NamedGraph ng = parse_graph_text(read_file(o.graph));
  GadgetGraph gg = gadget_from_graph(ng);
  RestrictionProfile prof = build_profile(o.profile, o.symmetry);
  if (prof.symmetry_terminal_order || prof.symmetry_reversal)
    throw Error(ErrorKind::UsageError,
                "terminal-order/reversal symmetry contradicts subproblem pinning; use "
                "first-vertex,first-edge,second-edge,k4 for split runs");
  Encoded enc = encode(gg.graph, o.pages, prof);

  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + o.out_dir + ": " + ec.message());
  write_dimacs_file(enc.cnf, o.out_dir + "/base.cnf");
  write_file(o.out_dir + "/base.map", write_varmap_text(enc.vars));

  auto specs = enumerate_subproblems(gg, o.max_between, o.dedup_reflection);
  std::string manifest = "split pages=" + std::to_string(o.pages) +
                         " vars=" + std::to_string(enc.cnf.num_vars) + "\n";
  manifest += "base base.cnf\nmap base.map\n";
  for (const auto& spec : specs) {
    CnfFormula extra;
    extra.num_vars = enc.cnf.num_vars;
    pin_subproblem(gg.graph, enc.vars, spec, extra);
    std::string name = job_name(spec);
    write_dimacs_file(extra, o.out_dir + "/" + name + ".extra");
    manifest += "job " + name + " " + name + ".extra\n";
  }
  write_file(o.out_dir + "/manifest.txt", manifest);
  std::cout << "subproblems " << specs.size() << "\n";
  return 0;
}

// --- verify --------------------------------------------------------------

void print_violation(const Violation& v) {
  std::cout << "violation " << to_string(v.kind);
  for (const Edge& e : v.edges) std::cout << " (" << e.u << "," << e.v << ")";
  if (!v.note.empty()) std::cout << " " << v.note;
  std::cout << "\n";
}

int cmd_verify(const std::string& graph, const std::string& emb_path) {
  NamedGraph ng = parse_graph_text(read_file(graph));
  BookEmbedding emb = parse_embedding_text(read_file(emb_path));
  ValidationReport rep = validate_embedding(ng.graph, emb);
  if (rep.valid) {
    std::cout << "valid\n";
    return 0;
  }
  for (const auto& v : rep.violations) print_violation(v);
  std::cout << "invalid " << rep.violations.size() << " violation(s)\n";
  return 1;
}

// --- analyze -------------------------------------------------------------

int cmd_analyze(const std::string& emb_path, bool forbidden, bool patterns) {
  BookEmbedding emb = parse_embedding_text(read_file(emb_path));
  std::map<VertexId, int> pos;
  for (int i = 0; i < (int)emb.order.size(); ++i) pos[emb.order[i]] = i;

  std::cout << "pages " << emb.page_count << "\n";
  std::cout << "spine " << emb.order.size() << "\n";
  std::vector<std::vector<Edge>> by_page(emb.page_count);
  for (const auto& [e, p] : emb.pages) by_page[p].push_back(e);
  for (int p = 0; p < emb.page_count; ++p) {
    const auto& es = by_page[p];
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        const Edge &e = es[i], &f = es[j];
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
        if (edges_cross(emb.order, e, f)) ++crossings;
      }
    std::cout << "page " << p << " edges " << es.size() << " crossings " << crossings << "\n";
  }

  if (forbidden) {
    ForbiddenScanReport rep = forbidden_scan(emb);
    for (const auto& v : rep.violations) print_violation(v);
    for (const auto& v : rep.near_misses) {
      std::cout << "near-miss " << to_string(v.kind);
      for (const Edge& e : v.edges) std::cout << " (" << e.u << "," << e.v << ")";
      std::cout << "\n";
    }
    std::cout << "scan violations " << rep.violations.size() << " near-misses "
              << rep.near_misses.size() << "\n";
  }

  if (patterns) {
    for (int p = 0; p < emb.page_count; ++p) {
      const auto& es = by_page[p];
      std::cout << "page " << p << " pattern ";
      if (es.size() < 2) {
        std::cout << "n/a (fewer than 2 edges)\n";
        continue;
      }
      std::set<VertexId> ends;
      bool indep = true;
      for (const Edge& e : es)
        if (!ends.insert(e.u).second || !ends.insert(e.v).second) indep = false;
      if (!indep) {
        std::cout << "n/a (edges share endpoints)\n";
        continue;
      }
      std::cout << to_string(classify_pairs(emb.order, es)) << "\n";
    }
  }
  return 0;
}

// --- stats ---------------------------------------------------------------

int cmd_stats(const std::string& graph) {
  NamedGraph ng = parse_graph_text(read_file(graph));
  const PlaneGraph& g = ng.graph;
  std::cout << "graph " << ng.name << "\n";
  std::cout << "vertices " << g.num_vertices() << "\n";
  std::cout << "edges " << g.num_edges() << "\n";
  std::cout << "faces " << g.num_faces() << "\n";
  std::cout << "maximal-planar " << (is_maximal_planar(g) ? "yes" : "no") << "\n";
  try {
    GadgetGraph gg = gadget_from_graph(ng);
    std::cout << "poles " << gg.pole_a << " " << gg.pole_b << "\n";
    std::cout << "terminals " << gg.terminals.size() << "\n";
    std::cout << "satellite-edges " << gg.satellite_edges.size() << "\n";
    std::cout << "terminal-eccentricity " << dq_distance(gg) << "\n";
  } catch (const Error&) {
    // not a gadget graph; structural stats only
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar book-embedding toolkit: gadget generation, CNF encoding, "
               "SAT-backend orchestration and embedding analysis"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* cgen = app.add_subcommand("gen", "generate a family graph");
  cgen->add_option("--family", gen.family, "qk | qk-contracted | gn | final")->required();
  cgen->add_option("--k", gen.k, "terminals per gadget")->required();
  cgen->add_option("--n", gen.n, "copies sharing the poles (gn/final)");
  cgen->add_flag("--contract", gen.contract, "contract variant of qk");
  cgen->add_option("--max-vertices", gen.max_vertices, "size cap for final");
  cgen->add_option("-o,--out", gen.out, "output graph file")->required();

  EncodeOpts enc;
  auto* cenc = app.add_subcommand("encode", "encode a p-page embedding question as CNF");
  cenc->add_option("graph", enc.graph, "input graph file")->required();
  cenc->add_option("--pages", enc.pages, "page count")->required();
  cenc->add_option("--profile", enc.profile, "none | fact1 | fact1-linear | fact2");
  cenc->add_option("--symmetry", enc.symmetry,
                   "none | all | list of first-vertex,terminal-order,reversal,first-edge,"
                   "second-edge,k4");
  auto* sub_opt = cenc->add_option("--subproblem", enc.subproblem,
                                   "terminals between the poles: none or e.g. 0,2,1");
  cenc->add_option("-o,--out", enc.out, "output DIMACS file")->required();
  cenc->add_option("--map", enc.map, "sidecar map file (default: OUT.map)");

  SolveOpts sol;
  auto* csol = app.add_subcommand("solve", "run the SAT backend on a CNF file or split directory");
  csol->add_option("target", sol.target, "CNF file or split directory")->required();
  csol->add_option("--map", sol.map, "variable map for decoding");
  csol->add_option("--timeout", sol.timeout, "per-job timeout in seconds");
  csol->add_option("--jobs", sol.jobs, "parallel backend processes");
  csol->add_option("--expect", sol.expect, "sat | unsat: exit 1 on mismatch")
      ->check(CLI::IsMember({"sat", "unsat"}));
  csol->add_option("--backend", sol.backend, "command template with {cnf}");
  csol->add_option("-o,--out", sol.out, "decode a model into this embedding file");

  SplitOpts spl;
  auto* cspl = app.add_subcommand("split", "materialize subproblem jobs for a gadget graph");
  cspl->add_option("graph", spl.graph, "input graph file (role-tagged)")->required();
  cspl->add_option("--pages", spl.pages, "page count")->required();
  cspl->add_option("--max-between", spl.max_between, "max terminals between the poles")
      ->required();
  cspl->add_option("--profile", spl.profile, "none | fact1 | fact1-linear | fact2");
  cspl->add_option("--symmetry", spl.symmetry, "as for encode");
  cspl->add_flag("--dedup-reflection", spl.dedup_reflection, "drop reversed duplicates");
  cspl->add_option("-o,--out", spl.out_dir, "output directory")->required();

  std::string vgraph, vemb;
  auto* cver = app.add_subcommand("verify", "validate an embedding against a graph");
  cver->add_option("graph", vgraph, "graph file")->required();
  cver->add_option("embedding", vemb, "embedding file")->required();

  std::string aemb;
  bool aforbidden = false, apatterns = false;
  auto* cana = app.add_subcommand("analyze", "report on an embedding file");
  cana->add_option("embedding", aemb, "embedding file")->required();
  cana->add_flag("--forbidden,--lemma1", aforbidden,
                 "scan for the three forbidden configurations");
  cana->add_flag("--patterns", apatterns, "classify each page against the canonical patterns");

  std::string sgraph;
  auto* csta = app.add_subcommand("stats", "structural statistics of a graph file");
  csta->add_option("graph", sgraph, "graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cgen->parsed()) return cmd_gen(gen);
    if (cenc->parsed()) {
      enc.have_subproblem = sub_opt->count() > 0;
      return cmd_encode(enc);
    }
    if (csol->parsed()) return cmd_solve(sol);
    if (cspl->parsed()) return cmd_split(spl);
    if (cver->parsed()) return cmd_verify(vgraph, vemb);
    if (cana->parsed()) return cmd_analyze(aemb, aforbidden, apatterns);
    if (csta->parsed()) return cmd_stats(sgraph);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
