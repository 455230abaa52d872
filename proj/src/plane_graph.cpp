#include "bookemb/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace bookemb {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::NonSimple: return "NonSimple";
    case ErrorKind::InconsistentFaces: return "InconsistentFaces";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::OuterFace: return "OuterFace";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::BridgeViolation: return "BridgeViolation";
    case ErrorKind::PolesNotOnOuterFace: return "PolesNotOnOuterFace";
    case ErrorKind::NonConsecutivePoles: return "NonConsecutivePoles";
    case ErrorKind::NotCofacial: return "NotCofacial";
    case ErrorKind::LoopCreated: return "LoopCreated";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::SharedVertex: return "SharedVertex";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::CoverageMismatch: return "CoverageMismatch";
    case ErrorKind::WrongPageCount: return "WrongPageCount";
    case ErrorKind::ProfileRoleMismatch: return "ProfileRoleMismatch";
    case ErrorKind::InconsistentModel: return "InconsistentModel";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::TooFewPairs: return "TooFewPairs";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SpawnFailure: return "SpawnFailure";
    case ErrorKind::MalformedOutput: return "MalformedOutput";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Error";
}

std::string role_to_string(const Role& r) {
  switch (r.kind) {
    case Role::Kind::Plain: return "plain";
    case Role::Kind::Pole: return "pole";
    case Role::Kind::Terminal: return "terminal:" + std::to_string(r.index);
    case Role::Kind::SatelliteA: return "sata:" + std::to_string(r.index);
    case Role::Kind::SatelliteB: return "satb:" + std::to_string(r.index);
    case Role::Kind::Stellation: return "stell:" + std::to_string(r.index);
  }
  return "plain";
}

std::optional<Role> role_from_string(const std::string& s) {
  if (s == "plain") return Role::plain();
  if (s == "pole") return Role::pole();
  auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string head = s.substr(0, colon);
  int idx = 0;
  try {
    idx = std::stoi(s.substr(colon + 1));
  } catch (...) {
    return std::nullopt;
  }
  if (head == "terminal") return Role::terminal(idx);
  if (head == "sata") return Role::satellite_a(idx);
  if (head == "satb") return Role::satellite_b(idx);
  if (head == "stell") return Role::stellation(idx);
  return std::nullopt;
}

bool Face::contains(VertexId v) const {
  return std::find(walk.begin(), walk.end(), v) != walk.end();
}

bool Face::has_step(VertexId a, VertexId b) const {
  const std::size_t L = walk.size();
  if (L < 2) return false;
  for (std::size_t i = 0; i < L; ++i) {
    if (walk[i] == a && walk[(i + 1) % L] == b) return true;
  }
  return false;
}

std::vector<VertexId> Face::canonical() const {
  const std::size_t L = walk.size();
  if (L == 0) return {};
  std::vector<VertexId> best = walk;
  std::vector<VertexId> rot = walk;
  for (std::size_t s = 1; s < L; ++s) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

namespace {

// All directed steps of a walk; a length-1 walk has none.
template <typename F>
void for_each_step(const Face& f, F&& fn) {
  const std::size_t L = f.walk.size();
  if (L < 2) return;
  for (std::size_t i = 0; i < L; ++i) fn(f.walk[i], f.walk[(i + 1) % L]);
}

std::size_t find_unique_pos(const Face& f, VertexId v, const char* what) {
  std::size_t pos = f.walk.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.walk.size(); ++i) {
    if (f.walk[i] == v) {
      pos = i;
      ++count;
    }
  }
  if (count == 0) throw Error(ErrorKind::UnknownVertex, std::string(what) + " not on face walk");
  if (count > 1) throw Error(ErrorKind::NonSimple, std::string(what) + " occurs more than once on face walk");
  return pos;
}

}  // namespace

PlaneGraph PlaneGraph::from_faces(const std::vector<Face>& faces, std::size_t outer_index) {
  if (faces.empty()) throw Error(ErrorKind::InconsistentFaces, "empty face list");
  if (outer_index >= faces.size()) throw Error(ErrorKind::UnknownFace, "outer index out of range");
  PlaneGraph g;
  VertexId max_id = -1;
  for (const auto& f : faces) {
    if (f.walk.empty()) throw Error(ErrorKind::InconsistentFaces, "empty face walk");
    for (VertexId v : f.walk) {
      if (v < 0) throw Error(ErrorKind::InconsistentFaces, "negative vertex id");
      max_id = std::max(max_id, v);
    }
  }
  g.verts_.resize(max_id + 1);
  for (const auto& f : faces) {
    for (VertexId v : f.walk) {
      if (!g.verts_[v].alive) {
        g.verts_[v].alive = true;
        ++g.alive_count_;
      }
    }
    Face copy = f;
    for_each_step(copy, [&](VertexId a, VertexId b) {
      if (a == b) throw Error(ErrorKind::NonSimple, "self-loop step in face walk");
      if (!g.edges_.count(Edge(a, b))) g.add_edge_internal(a, b);
    });
    g.faces_.push_back(std::move(copy));
  }
  g.outer_ = outer_index;
  g.validate();
  return g;
}

std::vector<VertexId> PlaneGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_count_);
  for (VertexId v = 0; v < (VertexId)verts_.size(); ++v) {
    if (verts_[v].alive) out.push_back(v);
  }
  return out;
}

std::size_t PlaneGraph::degree(VertexId v) const {
  if (!alive(v)) throw Error(ErrorKind::UnknownVertex, "degree of dead vertex " + std::to_string(v));
  return verts_[v].adj.size();
}

const std::set<VertexId>& PlaneGraph::neighbors(VertexId v) const {
  if (!alive(v)) throw Error(ErrorKind::UnknownVertex, "neighbors of dead vertex " + std::to_string(v));
  return verts_[v].adj;
}

Role PlaneGraph::role(VertexId v) const {
  if (!alive(v)) throw Error(ErrorKind::UnknownVertex, "role of dead vertex " + std::to_string(v));
  return verts_[v].role;
}

void PlaneGraph::set_role(VertexId v, Role r) {
  if (!alive(v)) throw Error(ErrorKind::UnknownVertex, "set_role of dead vertex " + std::to_string(v));
  verts_[v].role = r;
}

std::vector<VertexId> PlaneGraph::vertices_with_role(Role::Kind kind) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < (VertexId)verts_.size(); ++v) {
    if (verts_[v].alive && verts_[v].role.kind == kind) out.push_back(v);
  }
  return out;
}

std::optional<std::size_t> PlaneGraph::find_face(const std::set<VertexId>& verts) const {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    std::set<VertexId> s(faces_[i].walk.begin(), faces_[i].walk.end());
    if (s == verts) return i;
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> PlaneGraph::faces_of_edge(VertexId a, VertexId b) const {
  if (!edges_.count(Edge(a, b))) throw Error(ErrorKind::UnknownEdge, "no such edge");
  std::size_t fab = faces_.size(), fba = faces_.size();
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].has_step(a, b)) fab = i;
    if (faces_[i].has_step(b, a)) fba = i;
  }
  if (fab == faces_.size() || fba == faces_.size()) {
    throw Error(ErrorKind::InconsistentFaces, "edge steps missing from face walks");
  }
  return {fab, fba};
}

VertexId PlaneGraph::add_vertex(Role r) {
  verts_.push_back(VertexRec{r, true, {}});
  ++alive_count_;
  return (VertexId)(verts_.size() - 1);
}

void PlaneGraph::add_edge_internal(VertexId a, VertexId b) {
  edges_.insert(Edge(a, b));
  verts_[a].adj.insert(b);
  verts_[b].adj.insert(a);
}

void PlaneGraph::remove_edge_internal(VertexId a, VertexId b) {
  edges_.erase(Edge(a, b));
  verts_[a].adj.erase(b);
  verts_[b].adj.erase(a);
}

void PlaneGraph::check_face_index(std::size_t fi) const {
  if (fi >= faces_.size()) throw Error(ErrorKind::UnknownFace, "face index out of range");
}

VertexId PlaneGraph::stellate_face(std::size_t fi, Role r) {
  check_face_index(fi);
  if (fi == outer_) throw Error(ErrorKind::OuterFace, "cannot stellate the outer face");
  const Face f = faces_[fi];
  std::set<VertexId> seen(f.walk.begin(), f.walk.end());
  if (seen.size() != f.walk.size() || f.walk.size() < 3) {
    throw Error(ErrorKind::NonSimple, "stellation requires a simple cycle face");
  }
  VertexId s = add_vertex(r);
  for (VertexId v : f.walk) add_edge_internal(s, v);
  const std::size_t L = f.walk.size();
  faces_[fi] = Face{{s, f.walk[0], f.walk[1]}};
  for (std::size_t i = 1; i < L; ++i) {
    faces_.push_back(Face{{s, f.walk[i], f.walk[(i + 1) % L]}});
  }
  return s;
}

std::vector<VertexId> PlaneGraph::stellate_all_bounded(Role r) {
  const std::size_t n_before = faces_.size();
  std::vector<VertexId> out;
  for (std::size_t fi = 0; fi < n_before; ++fi) {
    if (fi == outer_) continue;
    out.push_back(stellate_face(fi, r));
  }
  validate();
  return out;
}

void PlaneGraph::split_face(std::size_t fi, VertexId a, VertexId b) {
  check_face_index(fi);
  if (a == b) throw Error(ErrorKind::NonSimple, "chord endpoints equal");
  if (edges_.count(Edge(a, b))) throw Error(ErrorKind::NonSimple, "chord already an edge");
  const Face f = faces_[fi];
  std::size_t pa = find_unique_pos(f, a, "chord endpoint");
  std::size_t pb = find_unique_pos(f, b, "chord endpoint");
  const std::size_t L = f.walk.size();
  // part1: a .. b (closing step b->a), part2: b .. a (closing step a->b)
  std::vector<VertexId> w1, w2;
  for (std::size_t i = pa; i != pb; i = (i + 1) % L) w1.push_back(f.walk[i]);
  w1.push_back(b);
  for (std::size_t i = pb; i != pa; i = (i + 1) % L) w2.push_back(f.walk[i]);
  w2.push_back(a);
  if (w1.size() < 3 || w2.size() < 3) {
    throw Error(ErrorKind::NonSimple, "chord endpoints adjacent on face walk");
  }
  add_edge_internal(a, b);
  faces_[fi] = Face{std::move(w1)};
  faces_.push_back(Face{std::move(w2)});
}

std::vector<VertexId> PlaneGraph::add_path_in_face(std::size_t fi, VertexId a, VertexId b,
                                                   const std::vector<Role>& roles) {
  check_face_index(fi);
  if (roles.empty()) throw Error(ErrorKind::UsageError, "path needs at least one new vertex");
  if (a == b) throw Error(ErrorKind::NonSimple, "path endpoints equal");
  const Face f = faces_[fi];
  std::size_t pa = find_unique_pos(f, a, "path endpoint");
  std::size_t pb = find_unique_pos(f, b, "path endpoint");
  const std::size_t L = f.walk.size();
  std::vector<VertexId> fresh;
  for (Role r : roles) fresh.push_back(add_vertex(r));
  add_edge_internal(a, fresh.front());
  for (std::size_t i = 0; i + 1 < fresh.size(); ++i) add_edge_internal(fresh[i], fresh[i + 1]);
  add_edge_internal(fresh.back(), b);
  // part1 = a, w_1..w_r, b, rest of walk b -> a; part2 mirrors on the other side.
  std::vector<VertexId> w1, w2;
  w1.push_back(a);
  for (VertexId w : fresh) w1.push_back(w);
  for (std::size_t i = pb; i != pa; i = (i + 1) % L) w1.push_back(f.walk[i]);
  w2.push_back(b);
  for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) w2.push_back(*it);
  for (std::size_t i = pa; i != pb; i = (i + 1) % L) w2.push_back(f.walk[i]);
  faces_[fi] = Face{std::move(w1)};
  faces_.push_back(Face{std::move(w2)});
  return fresh;
}

void PlaneGraph::remove_edge(VertexId a, VertexId b) {
  if (!edges_.count(Edge(a, b))) throw Error(ErrorKind::UnknownEdge, "no such edge");
  auto [fab, fba] = faces_of_edge(a, b);
  if (fab == fba) {
    throw Error(ErrorKind::BridgeViolation, "removing a bridge would disconnect the embedding");
  }
  // Rotate fab to start with step (a,b) and fba with step (b,a).
  auto rotate_to = [](const Face& f, VertexId x, VertexId y) {
    const std::size_t L = f.walk.size();
    for (std::size_t i = 0; i < L; ++i) {
      if (f.walk[i] == x && f.walk[(i + 1) % L] == y) {
        std::vector<VertexId> out;
        for (std::size_t j = 0; j < L; ++j) out.push_back(f.walk[(i + j) % L]);
        return out;
      }
    }
    throw Error(ErrorKind::InconsistentFaces, "step vanished");
  };
  std::vector<VertexId> wa = rotate_to(faces_[fab], a, b);  // [a, b, alpha...]
  std::vector<VertexId> wb = rotate_to(faces_[fba], b, a);  // [b, a, beta...]
  std::vector<VertexId> merged;
  merged.push_back(a);
  for (std::size_t i = 2; i < wb.size(); ++i) merged.push_back(wb[i]);
  merged.push_back(b);
  for (std::size_t i = 2; i < wa.size(); ++i) merged.push_back(wa[i]);
  remove_edge_internal(a, b);
  faces_[fab] = Face{std::move(merged)};
  if (outer_ == fba) outer_ = fab;
  faces_.erase(faces_.begin() + fba);
  if (outer_ > fba) --outer_;
}

std::map<VertexId, VertexId> PlaneGraph::attach(Edge e, const PlaneGraph& h, VertexId a_h,
                                                VertexId b_h) {
  if (!edges_.count(e)) throw Error(ErrorKind::UnknownEdge, "attachment edge missing");
  if (!h.alive(a_h) || !h.alive(b_h) || a_h == b_h) {
    throw Error(ErrorKind::UnknownVertex, "bad pole ids for attachment");
  }
  const Face& o = h.outer_face();
  if (!o.contains(a_h) || !o.contains(b_h)) {
    throw Error(ErrorKind::PolesNotOnOuterFace, "poles must lie on the outer face");
  }
  bool step_ab = o.has_step(a_h, b_h);
  bool step_ba = o.has_step(b_h, a_h);
  if (!step_ab && !step_ba) {
    throw Error(ErrorKind::NonConsecutivePoles, "poles must be consecutive on the outer face");
  }
  // Identify a_h with e.u and b_h with e.v.
  std::map<VertexId, VertexId> vmap;
  vmap[a_h] = e.u;
  vmap[b_h] = e.v;
  for (VertexId w : h.vertices()) {
    if (w == a_h || w == b_h) continue;
    vmap[w] = add_vertex(h.role(w));
  }
  for (const Edge& he : h.edges()) {
    VertexId x = vmap[he.u], y = vmap[he.v];
    if (Edge(x, y) == e) continue;  // h's pole edge lands on the existing one
    add_edge_internal(x, y);
  }
  // Copy h's bounded faces.
  for (std::size_t i = 0; i < h.faces().size(); ++i) {
    if (i == h.outer_face_index()) continue;
    Face f;
    f.walk.reserve(h.faces()[i].walk.size());
    for (VertexId w : h.faces()[i].walk) f.walk.push_back(vmap[w]);
    faces_.push_back(std::move(f));
  }
  // Expand the g-face containing the reverse of the outer pole step by the
  // rest of h's outer walk.
  VertexId P = step_ab ? a_h : b_h;
  VertexId Q = step_ab ? b_h : a_h;
  const std::size_t L = o.walk.size();
  std::size_t pos = L;
  for (std::size_t i = 0; i < L; ++i) {
    if (o.walk[i] == P && o.walk[(i + 1) % L] == Q) {
      pos = i;
      break;
    }
  }
  std::vector<VertexId> chain;  // c_1 .. c_r mapped
  for (std::size_t j = 2; j < L; ++j) chain.push_back(vmap[o.walk[(pos + j) % L]]);
  VertexId gq = vmap[Q], gp = vmap[P];
  std::size_t target = faces_.size();
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].has_step(gq, gp)) {
      target = i;
      break;
    }
  }
  if (target == faces_.size()) throw Error(ErrorKind::InconsistentFaces, "attachment face missing");
  if (!chain.empty()) {
    const Face tf = faces_[target];
    std::vector<VertexId> neww;
    const std::size_t TL = tf.walk.size();
    for (std::size_t i = 0; i < TL; ++i) {
      neww.push_back(tf.walk[i]);
      if (tf.walk[i] == gq && tf.walk[(i + 1) % TL] == gp) {
        for (VertexId c : chain) neww.push_back(c);
      }
    }
    faces_[target] = Face{std::move(neww)};
  }
  validate();
  return vmap;
}

void PlaneGraph::contract_pair(VertexId u, VertexId v) {
  if (!alive(u) || !alive(v)) throw Error(ErrorKind::UnknownVertex, "contract on dead vertex");
  if (u == v) throw Error(ErrorKind::UsageError, "contracting a vertex with itself");
  if (edges_.count(Edge(u, v))) {
    throw Error(ErrorKind::LoopCreated, "contracting adjacent vertices would create a loop");
  }
  // Pick the pinch face: prefer the outer face, else the lowest index.
  std::size_t pinch = faces_.size();
  if (faces_[outer_].contains(u) && faces_[outer_].contains(v)) {
    pinch = outer_;
  } else {
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (faces_[i].contains(u) && faces_[i].contains(v)) {
        pinch = i;
        break;
      }
    }
  }
  if (pinch == faces_.size()) throw Error(ErrorKind::NotCofacial, "vertices share no face");

  const Face f = faces_[pinch];
  std::size_t pu = find_unique_pos(f, u, "contract endpoint");
  std::size_t pv = find_unique_pos(f, v, "contract endpoint");
  const std::size_t L = f.walk.size();
  // Split the pinch face at u and v into two walks, both based at u.
  std::vector<VertexId> wa, wb;
  wa.push_back(u);
  for (std::size_t i = (pu + 1) % L; i != pv; i = (i + 1) % L) wa.push_back(f.walk[i]);
  wb.push_back(u);
  for (std::size_t i = (pv + 1) % L; i != pu; i = (i + 1) % L) wb.push_back(f.walk[i]);

  // Reroute v's edges to u.
  std::vector<VertexId> vnbrs(verts_[v].adj.begin(), verts_[v].adj.end());
  for (VertexId x : vnbrs) {
    remove_edge_internal(v, x);
    if (x != u && !edges_.count(Edge(u, x))) add_edge_internal(u, x);
  }
  verts_[v].alive = false;
  --alive_count_;

  // Rename v -> u in every other face.
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (i == pinch) continue;
    for (VertexId& w : faces_[i].walk) {
      if (w == v) w = u;
    }
  }
  for (VertexId& w : wa) {
    if (w == v) w = u;
  }
  for (VertexId& w : wb) {
    if (w == v) w = u;
  }

  // Replace the pinch face by the split walks, dropping bigons (these are the
  // merged parallel-edge pairs).
  std::vector<Face> repl;
  if (wa.size() >= 3) repl.push_back(Face{std::move(wa)});
  if (wb.size() >= 3) repl.push_back(Face{std::move(wb)});
  bool pinch_was_outer = (pinch == outer_);
  if (!repl.empty()) {
    faces_[pinch] = std::move(repl[0]);
    if (repl.size() > 1) faces_.push_back(std::move(repl[1]));
  } else {
    faces_.erase(faces_.begin() + pinch);
    if (outer_ > pinch) --outer_;
  }
  if (pinch_was_outer && repl.empty()) outer_ = 0;

  try {
    validate();
  } catch (const Error& err) {
    throw Error(ErrorKind::NonSimple,
                std::string("contraction left an inconsistent embedding: ") + err.what());
  }
}

void PlaneGraph::set_outer(std::size_t fi) {
  check_face_index(fi);
  outer_ = fi;
}

void PlaneGraph::validate() const {
  if (faces_.empty()) throw Error(ErrorKind::InconsistentFaces, "no faces");
  if (outer_ >= faces_.size()) throw Error(ErrorKind::UnknownFace, "outer index out of range");
  // Directed step consistency and corner counts.
  std::map<std::pair<VertexId, VertexId>, int> steps;
  std::map<VertexId, std::size_t> corners;
  for (const auto& f : faces_) {
    if (f.walk.empty()) throw Error(ErrorKind::InconsistentFaces, "empty face walk");
    for (VertexId w : f.walk) {
      if (!alive(w)) throw Error(ErrorKind::InconsistentFaces, "dead vertex on face walk");
    }
    if (f.walk.size() >= 2) {
      for (VertexId w : f.walk) corners[w]++;
    }
    for_each_step(f, [&](VertexId a, VertexId b) {
      if (a == b) throw Error(ErrorKind::NonSimple, "self-loop step");
      steps[{a, b}]++;
    });
  }
  if (steps.size() != 2 * edges_.size()) {
    throw Error(ErrorKind::InconsistentFaces, "face steps do not match edge set");
  }
  for (const auto& [st, cnt] : steps) {
    if (cnt != 1) throw Error(ErrorKind::InconsistentFaces, "directed step repeated");
    if (!edges_.count(Edge(st.first, st.second))) {
      throw Error(ErrorKind::InconsistentFaces, "face step without edge");
    }
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw Error(ErrorKind::NonSimple, "self loop");
    if (!steps.count({e.u, e.v}) || !steps.count({e.v, e.u})) {
      throw Error(ErrorKind::InconsistentFaces, "edge not on two face sides");
    }
  }
  for (VertexId v = 0; v < (VertexId)verts_.size(); ++v) {
    if (!verts_[v].alive) continue;
    std::size_t c = corners.count(v) ? corners.at(v) : 0;
    if (c != verts_[v].adj.size()) {
      throw Error(ErrorKind::InconsistentFaces, "corner count != degree at vertex " + std::to_string(v));
    }
  }
  // Euler formula |V| - |E| + |F| = 2.
  long long euler = (long long)alive_count_ - (long long)edges_.size() + (long long)faces_.size();
  if (euler != 2) {
    throw Error(ErrorKind::EulerViolation,
                "V-E+F = " + std::to_string(euler) + " (V=" + std::to_string(alive_count_) +
                    " E=" + std::to_string(edges_.size()) + " F=" + std::to_string(faces_.size()) + ")");
  }
  // Connectivity over alive vertices.
  if (alive_count_ > 0) {
    VertexId start = -1;
    for (VertexId v = 0; v < (VertexId)verts_.size(); ++v) {
      if (verts_[v].alive) {
        start = v;
        break;
      }
    }
    std::set<VertexId> seen{start};
    std::queue<VertexId> q;
    q.push(start);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (VertexId y : verts_[x].adj) {
        if (seen.insert(y).second) q.push(y);
      }
    }
    if (seen.size() != alive_count_) throw Error(ErrorKind::Disconnected, "graph is not connected");
  }
}

bool PlaneGraph::operator==(const PlaneGraph& other) const {
  if (alive_count_ != other.alive_count_ || edges_ != other.edges_) return false;
  for (VertexId v = 0; v < (VertexId)std::max(verts_.size(), other.verts_.size()); ++v) {
    bool a = alive(v), b = other.alive(v);
    if (a != b) return false;
    if (a && !(verts_[v].role == other.verts_[v].role)) return false;
  }
  auto canon = [](const PlaneGraph& g) {
    std::vector<std::vector<VertexId>> fs;
    for (const auto& f : g.faces_) fs.push_back(f.canonical());
    std::sort(fs.begin(), fs.end());
    return fs;
  };
  if (canon(*this) != canon(other)) return false;
  return faces_[outer_].canonical() == other.faces_[other.outer_].canonical();
}

}  // namespace bookemb
