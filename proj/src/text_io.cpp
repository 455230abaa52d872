#include "bookemb/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace bookemb {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(const std::string& tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    bad_line(line_no, "expected integer, got '" + tok + "'");
  return value;
}

VertexId parse_vertex(const std::string& tok, std::size_t line_no) {
  long long value = parse_int(tok, line_no);
  if (value < 0 || value > 1000000000) bad_line(line_no, "vertex id out of range: " + tok);
  return static_cast<VertexId>(value);
}

// Splits `text` into (line_no, tokens) for non-blank, non-comment lines.
std::vector<std::pair<std::size_t, std::vector<std::string>>> logical_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    out.emplace_back(line_no, std::move(toks));
  }
  return out;
}

long long parse_kv(const std::string& tok, const char* key, std::size_t line_no) {
  std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) bad_line(line_no, "expected " + prefix + "<int>, got '" + tok + "'");
  return parse_int(tok.substr(prefix.size()), line_no);
}

}  // namespace

std::string write_graph_text(const PlaneGraph& g, const std::string& name) {
  if (!valid_name(name)) throw Error(ErrorKind::UsageError, "invalid graph name '" + name + "'");
  std::string out;
  out.reserve(64 + 16 * g.num_vertices() + 16 * g.num_edges());
  out += "graph " + name + " vertices=" + std::to_string(g.num_vertices()) +
         " edges=" + std::to_string(g.num_edges()) + "\n";
  for (VertexId v : g.vertices())
    out += "v " + std::to_string(v) + " " + role_to_string(g.role(v)) + "\n";
  for (const Edge& e : g.edges())
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  for (std::size_t fi = 0; fi < g.num_faces(); ++fi) {
    out += "f";
    for (VertexId v : g.faces()[fi].canonical()) out += " " + std::to_string(v);
    if (fi == g.outer_face_index()) out += " outer";
    out += "\n";
  }
  return out;
}

NamedGraph parse_graph_text(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty graph file");

  auto& [hline, htoks] = lines[0];
  if (htoks[0] != "graph" || htoks.size() != 4) bad_line(hline, "expected 'graph <name> vertices=<n> edges=<m>'");
  NamedGraph result;
  result.name = htoks[1];
  if (!valid_name(result.name)) bad_line(hline, "invalid graph name");
  long long decl_v = parse_kv(htoks[2], "vertices", hline);
  long long decl_e = parse_kv(htoks[3], "edges", hline);

  std::map<VertexId, Role> roles;
  std::set<Edge> declared_edges;
  std::vector<Face> faces;
  std::optional<std::size_t> outer;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto& [no, toks] = lines[li];
    if (toks[0] == "v") {
      if (toks.size() != 3) bad_line(no, "expected 'v <id> <role>'");
      VertexId id = parse_vertex(toks[1], no);
      auto role = role_from_string(toks[2]);
      if (!role) bad_line(no, "unknown role '" + toks[2] + "'");
      if (!roles.emplace(id, *role).second) bad_line(no, "duplicate vertex " + toks[1]);
    } else if (toks[0] == "e") {
      if (toks.size() != 3) bad_line(no, "expected 'e <u> <v>'");
      VertexId u = parse_vertex(toks[1], no);
      VertexId v = parse_vertex(toks[2], no);
      if (u == v) bad_line(no, "loop edge");
      if (!declared_edges.insert(Edge(u, v)).second) bad_line(no, "duplicate edge");
    } else if (toks[0] == "f") {
      Face f;
      std::size_t end = toks.size();
      if (end > 1 && toks[end - 1] == "outer") {
        if (outer) bad_line(no, "second outer face");
        outer = faces.size();
        --end;
      }
      for (std::size_t i = 1; i < end; ++i) f.walk.push_back(parse_vertex(toks[i], no));
      if (f.walk.empty()) bad_line(no, "empty face walk");
      faces.push_back(std::move(f));
    } else {
      bad_line(no, "unknown record '" + toks[0] + "'");
    }
  }

  if (faces.empty()) throw Error(ErrorKind::ParseError, "no faces");
  if (!outer) throw Error(ErrorKind::ParseError, "no face marked outer");
  result.graph = PlaneGraph::from_faces(faces, *outer);

  auto verts = result.graph.vertices();
  if (verts.size() != roles.size() ||
      !std::all_of(verts.begin(), verts.end(), [&](VertexId v) { return roles.count(v) > 0; }))
    throw Error(ErrorKind::ParseError, "v records do not match the face walks");
  if (result.graph.edges() != declared_edges)
    throw Error(ErrorKind::ParseError, "e records do not match the face walks");
  if ((long long)result.graph.num_vertices() != decl_v || (long long)result.graph.num_edges() != decl_e)
    throw Error(ErrorKind::ParseError, "declared counts do not match the graph");
  for (auto& [v, r] : roles) result.graph.set_role(v, r);
  return result;
}

GadgetGraph gadget_from_graph(const NamedGraph& g) {
  GadgetGraph out;
  out.graph = g.graph;
  out.name = g.name;
  auto poles = out.graph.vertices_with_role(Role::Kind::Pole);
  if (poles.size() != 2)
    throw Error(ErrorKind::ProfileRoleMismatch, "expected 2 poles, found " + std::to_string(poles.size()));
  out.pole_a = poles[0];
  out.pole_b = poles[1];

  std::map<std::int32_t, VertexId> terms;
  for (VertexId v : out.graph.vertices_with_role(Role::Kind::Terminal)) {
    if (!terms.emplace(out.graph.role(v).index, v).second)
      throw Error(ErrorKind::ProfileRoleMismatch, "duplicate terminal index");
  }
  for (auto& [i, v] : terms) out.terminals.push_back(v);

  std::map<std::int32_t, VertexId> sat_a, sat_b;
  for (VertexId v : out.graph.vertices_with_role(Role::Kind::SatelliteA)) sat_a[out.graph.role(v).index] = v;
  for (VertexId v : out.graph.vertices_with_role(Role::Kind::SatelliteB)) sat_b[out.graph.role(v).index] = v;
  if (sat_a.size() != sat_b.size())
    throw Error(ErrorKind::ProfileRoleMismatch, "satellite role sides do not pair up");
  for (auto& [i, av] : sat_a) {
    auto it = sat_b.find(i);
    if (it == sat_b.end())
      throw Error(ErrorKind::ProfileRoleMismatch, "satellite index " + std::to_string(i) + " missing a side");
    if (!out.graph.has_edge(av, it->second))
      throw Error(ErrorKind::ProfileRoleMismatch, "satellite pair " + std::to_string(i) + " is not an edge");
    out.satellite_edges.emplace_back(Edge(av, it->second), i);
  }
  out.check();
  return out;
}

std::string write_embedding_text(const BookEmbedding& e) {
  std::string out = "embedding pages=" + std::to_string(e.page_count) + "\n";
  out += "order";
  for (VertexId v : e.order) out += " " + std::to_string(v);
  out += "\n";
  for (auto& [edge, page] : e.pages)
    out += "page " + std::to_string(page) + " " + std::to_string(edge.u) + " " + std::to_string(edge.v) + "\n";
  return out;
}

BookEmbedding parse_embedding_text(const std::string& text) {
  auto lines = logical_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty embedding file");
  auto& [hline, htoks] = lines[0];
  if (htoks[0] != "embedding" || htoks.size() != 2) bad_line(hline, "expected 'embedding pages=<p>'");
  BookEmbedding emb;
  long long pages = parse_kv(htoks[1], "pages", hline);
  if (pages < 1 || pages > 64) bad_line(hline, "page count out of range");
  emb.page_count = static_cast<int>(pages);

  std::set<VertexId> on_spine;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto& [no, toks] = lines[li];
    if (toks[0] == "order") {
      if (!emb.order.empty()) bad_line(no, "second order line");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        VertexId v = parse_vertex(toks[i], no);
        if (!on_spine.insert(v).second) bad_line(no, "vertex repeated on the spine");
        emb.order.push_back(v);
      }
      if (emb.order.empty()) bad_line(no, "empty order line");
    } else if (toks[0] == "page") {
      if (toks.size() != 4) bad_line(no, "expected 'page <p> <u> <v>'");
      long long p = parse_int(toks[1], no);
      if (p < 0 || p >= emb.page_count) bad_line(no, "page index out of range");
      VertexId u = parse_vertex(toks[2], no);
      VertexId v = parse_vertex(toks[3], no);
      if (u == v) bad_line(no, "loop edge");
      if (!emb.pages.emplace(Edge(u, v), static_cast<int>(p)).second) bad_line(no, "duplicate edge");
    } else {
      bad_line(no, "unknown record '" + toks[0] + "'");
    }
  }
  if (emb.order.empty()) throw Error(ErrorKind::ParseError, "missing order line");
  for (auto& [edge, page] : emb.pages)
    if (!on_spine.count(edge.u) || !on_spine.count(edge.v))
      throw Error(ErrorKind::ParseError, "edge endpoint missing from the order line");
  return emb;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "read failed on " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  out.write(content.data(), (std::streamsize)content.size());
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write failed on " + path);
}

}  // namespace bookemb
