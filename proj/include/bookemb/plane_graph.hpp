#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bookemb {

using VertexId = std::int32_t;

enum class ErrorKind {
  EulerViolation,
  NonSimple,
  InconsistentFaces,
  Disconnected,
  OuterFace,
  UnknownFace,
  UnknownEdge,
  UnknownVertex,
  BridgeViolation,
  PolesNotOnOuterFace,
  NonConsecutivePoles,
  NotCofacial,
  LoopCreated,
  InvalidK,
  InvalidN,
  SizeLimitExceeded,
  SharedVertex,
  NotIndependent,
  CoverageMismatch,
  WrongPageCount,
  ProfileRoleMismatch,
  InconsistentModel,
  TooShort,
  TooFewPairs,
  ParseError,
  SpawnFailure,
  MalformedOutput,
  IoError,
  UsageError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Vertex role. `index` holds the terminal/satellite index or the stellation
// round; it is 0 for Plain and Pole.
struct Role {
  enum class Kind : std::uint8_t { Plain, Pole, Terminal, SatelliteA, SatelliteB, Stellation };
  Kind kind = Kind::Plain;
  std::int32_t index = 0;

  static Role plain() { return {Kind::Plain, 0}; }
  static Role pole() { return {Kind::Pole, 0}; }
  static Role terminal(std::int32_t i) { return {Kind::Terminal, i}; }
  static Role satellite_a(std::int32_t i) { return {Kind::SatelliteA, i}; }
  static Role satellite_b(std::int32_t i) { return {Kind::SatelliteB, i}; }
  static Role stellation(std::int32_t round) { return {Kind::Stellation, round}; }

  friend bool operator==(const Role&, const Role&) = default;
};

std::string role_to_string(const Role& r);
std::optional<Role> role_from_string(const std::string& s);

// Undirected edge, endpoints stored in ascending order.
struct Edge {
  VertexId u;
  VertexId v;
  Edge() : u(0), v(0) {}
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A face is a closed boundary walk.  Walks are orientation-consistent across
// the whole graph: every edge appears exactly once as a step (u,v) and exactly
// once as (v,u) over all faces.  A walk may repeat vertices (e.g. the single
// face of a tree); simple cycle faces have length >= 3.
struct Face {
  std::vector<VertexId> walk;
  std::size_t size() const { return walk.size(); }
  bool contains(VertexId v) const;
  bool has_step(VertexId a, VertexId b) const;
  // Rotation with the lexicographically smallest vertex sequence; used for
  // equality tests and serialization.
  std::vector<VertexId> canonical() const;
};

// Combinatorial plane graph: vertices with roles, undirected simple edges and
// the face walks of an embedding, one face designated as outer.  Planarity is
// certified by Euler consistency of the face set (validate()).
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // Builds a graph from face walks.  The vertex set is the union of all walk
  // vertices; ids need not be contiguous.  Throws InconsistentFaces /
  // NonSimple / EulerViolation / Disconnected on invalid input.
  static PlaneGraph from_faces(const std::vector<Face>& faces, std::size_t outer_index);

  // --- queries ----------------------------------------------------------
  std::size_t num_vertices() const { return alive_count_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  bool alive(VertexId v) const { return v >= 0 && v < (VertexId)verts_.size() && verts_[v].alive; }
  std::vector<VertexId> vertices() const;  // ascending
  const std::set<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t outer_face_index() const { return outer_; }
  const Face& outer_face() const { return faces_[outer_]; }
  bool has_edge(VertexId a, VertexId b) const { return edges_.count(Edge(a, b)) > 0; }
  std::size_t degree(VertexId v) const;
  const std::set<VertexId>& neighbors(VertexId v) const;
  Role role(VertexId v) const;
  void set_role(VertexId v, Role r);
  std::vector<VertexId> vertices_with_role(Role::Kind kind) const;  // ascending

  // Index of the first face whose vertex set equals `verts` (bounded or
  // outer), if any.
  std::optional<std::size_t> find_face(const std::set<VertexId>& verts) const;
  // Faces carrying the steps (a,b) and (b,a) respectively.
  std::pair<std::size_t, std::size_t> faces_of_edge(VertexId a, VertexId b) const;

  // --- mutations --------------------------------------------------------
  VertexId add_vertex(Role r = Role::plain());

  // Adds a vertex inside bounded face `fi` adjacent to every walk vertex.
  // The stellated face keeps index `fi` for its first replacement triangle;
  // two triangles are appended.  Errors: UnknownFace, OuterFace, NonSimple
  // (walk repeats a vertex).
  VertexId stellate_face(std::size_t fi, Role r = Role::plain());

  // Stellates every bounded face present at call time; returns new ids in
  // face-index order.
  std::vector<VertexId> stellate_all_bounded(Role r = Role::plain());

  // Splits face `fi` by chord (a,b); both a and b must occur exactly once on
  // the walk and must not already be adjacent.
  void split_face(std::size_t fi, VertexId a, VertexId b);

  // Adds a fresh path a - w_1 - ... - w_r - b inside face `fi` (r =
  // roles.size() new vertices), splitting it in two.  Returns the new ids.
  std::vector<VertexId> add_path_in_face(std::size_t fi, VertexId a, VertexId b,
                                         const std::vector<Role>& roles);

  // Removes edge (a,b), merging its two faces.  Errors: UnknownEdge,
  // BridgeViolation (both sides on the same face).
  void remove_edge(VertexId a, VertexId b);

  // Replaces edge (u,v) by a copy of `h`, identifying h's poles a_h/b_h with
  // u/v.  a_h and b_h must be consecutive on h's outer face.  Returns the
  // vertex map from h ids to ids in this graph.
  std::map<VertexId, VertexId> attach(Edge e, const PlaneGraph& h, VertexId a_h, VertexId b_h);

  // Identifies co-facial non-adjacent u and v (v is merged into u), merging
  // the parallel edge pairs that arise.  Errors: NotCofacial, LoopCreated.
  void contract_pair(VertexId u, VertexId v);

  void set_outer(std::size_t fi);

  // Full invariant check: simplicity, orientation consistency, corner counts,
  // Euler formula, connectivity.  Throws on violation.
  void validate() const;

  // Structural equality: same alive vertices with roles, same edges, same
  // face multiset up to walk rotation, same outer face.
  bool operator==(const PlaneGraph& other) const;

 private:
  struct VertexRec {
    Role role;
    bool alive = false;
    std::set<VertexId> adj;
  };
  std::vector<VertexRec> verts_;
  std::set<Edge> edges_;
  std::vector<Face> faces_;
  std::size_t outer_ = 0;
  std::size_t alive_count_ = 0;

  void add_edge_internal(VertexId a, VertexId b);
  void remove_edge_internal(VertexId a, VertexId b);
  void check_face_index(std::size_t fi) const;
};

}  // namespace bookemb
