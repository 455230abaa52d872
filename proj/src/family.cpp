#include "bookemb/family.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace bookemb {

void GadgetGraph::check() const {
  graph.validate();
  if (!graph.alive(pole_a) || !graph.alive(pole_b) || pole_a == pole_b) {
    throw Error(ErrorKind::UnknownVertex, "bad poles");
  }
  auto poles = graph.vertices_with_role(Role::Kind::Pole);
  if (poles.size() != 2) {
    throw Error(ErrorKind::ProfileRoleMismatch,
                "expected exactly 2 pole vertices, got " + std::to_string(poles.size()));
  }
  std::set<int> tidx;
  for (VertexId t : terminals) {
    Role r = graph.role(t);
    if (r.kind != Role::Kind::Terminal) {
      throw Error(ErrorKind::ProfileRoleMismatch, "terminal list vertex lacks terminal role");
    }
    if (!tidx.insert(r.index).second) {
      throw Error(ErrorKind::ProfileRoleMismatch, "duplicate terminal index");
    }
  }
  if (graph.vertices_with_role(Role::Kind::Terminal).size() != terminals.size()) {
    throw Error(ErrorKind::ProfileRoleMismatch, "terminal role count mismatch");
  }
  for (const auto& [e, seg] : satellite_edges) {
    if (!graph.has_edge(e.u, e.v)) throw Error(ErrorKind::UnknownEdge, "satellite edge missing");
    auto [fa, fb] = graph.faces_of_edge(e.u, e.v);
    if (graph.faces()[fa].size() != 3 || graph.faces()[fb].size() != 3) {
      throw Error(ErrorKind::InconsistentFaces, "satellite edge not on two triangles");
    }
  }
}

GadgetGraph build_qk(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidK, "k must be >= 2, got " + std::to_string(k));

  const VertexId A = 0, B = 1;
  auto T = [&](int i) { return (VertexId)(2 + ((i % k) + k) % k); };

  // K_{2,k}: quadrilateral faces F_i = <A, t_i, B, t_{i+1}>, F_{k-1} outer.
  std::vector<Face> quads;
  for (int i = 0; i < k; ++i) quads.push_back(Face{{A, T(i), B, T(i + 1)}});
  PlaneGraph g = PlaneGraph::from_faces(quads, (std::size_t)(k - 1));
  g.set_role(A, Role::pole());
  g.set_role(B, Role::pole());
  for (int i = 0; i < k; ++i) g.set_role(T(i), Role::terminal(i));

  auto face_of = [&](std::initializer_list<VertexId> vs) {
    auto fi = g.find_face(std::set<VertexId>(vs));
    if (!fi) throw Error(ErrorKind::UnknownFace, "construction face lookup failed");
    return *fi;
  };

  // Per bounded quadrilateral: the path A - b_i - a_i - B plus the four
  // triangulation chords from t_i and t_{i+1}.
  std::vector<VertexId> a(k - 1), b(k - 1);
  for (int i = 0; i < k - 1; ++i) {
    auto fresh = g.add_path_in_face(face_of({A, T(i), B, T(i + 1)}), A, B,
                                    {Role::satellite_b(i), Role::satellite_a(i)});
    b[i] = fresh[0];
    a[i] = fresh[1];
    g.split_face(face_of({A, T(i), B, a[i], b[i]}), T(i), b[i]);
    g.split_face(face_of({T(i), B, a[i], b[i]}), T(i), a[i]);
    g.split_face(face_of({A, B, T(i + 1), a[i], b[i]}), T(i + 1), b[i]);
    g.split_face(face_of({B, T(i + 1), a[i], b[i]}), T(i + 1), a[i]);
  }
  g.validate();

  // Two full stellation rounds; remember which triangle each new vertex
  // stellated (its neighborhood right after the round).
  auto round_map = [&](const std::vector<VertexId>& ids) {
    std::map<std::set<VertexId>, VertexId> m;
    for (VertexId s : ids) m[g.neighbors(s)] = s;
    return m;
  };
  auto r1 = round_map(g.stellate_all_bounded(Role::stellation(1)));
  auto st1 = [&](std::initializer_list<VertexId> vs) { return r1.at(std::set<VertexId>(vs)); };
  std::vector<VertexId> c(k - 1), d(k - 1), e(k - 1), f(k - 1);
  for (int i = 0; i < k - 1; ++i) {
    c[i] = st1({A, T(i), b[i]});
    d[i] = st1({A, b[i], T(i + 1)});
    e[i] = st1({B, T(i), a[i]});
    f[i] = st1({B, a[i], T(i + 1)});
  }
  auto r2 = round_map(g.stellate_all_bounded(Role::stellation(2)));
  auto st2 = [&](std::initializer_list<VertexId> vs) { return r2.at(std::set<VertexId>(vs)); };
  std::vector<VertexId> cp(k - 1), dp(k - 1), ep(k - 1), fp(k - 1);
  for (int i = 0; i < k - 1; ++i) {
    cp[i] = st2({c[i], T(i), b[i]});
    dp[i] = st2({d[i], b[i], T(i + 1)});
    ep[i] = st2({e[i], T(i), a[i]});
    fp[i] = st2({f[i], a[i], T(i + 1)});
  }

  // Eight targeted stellations per segment around the corner pairs.
  for (int i = 0; i < k - 1; ++i) {
    for (auto vs : std::vector<std::set<VertexId>>{
             {c[i], cp[i], T(i)},
             {c[i], cp[i], b[i]},
             {d[i], dp[i], b[i]},
             {d[i], dp[i], T(i + 1)},
             {e[i], ep[i], T(i)},
             {e[i], ep[i], a[i]},
             {f[i], fp[i], a[i]},
             {f[i], fp[i], T(i + 1)},
         }) {
      auto fi = g.find_face(vs);
      if (!fi) throw Error(ErrorKind::UnknownFace, "corner stellation face lookup failed");
      g.stellate_face(*fi, Role::stellation(3));
    }
  }

  // For each of the two faces on satellite edge (a_i, b_i), stellate its two
  // neighbors that do not contain the satellite edge.
  for (int i = 0; i < k - 1; ++i) {
    auto [fa, fb] = g.faces_of_edge(a[i], b[i]);
    std::vector<std::size_t> targets;
    for (std::size_t side : {fa, fb}) {
      const Face face = g.faces()[side];
      const std::size_t L = face.walk.size();
      for (std::size_t s = 0; s < L; ++s) {
        VertexId x = face.walk[s], y = face.walk[(s + 1) % L];
        if (Edge(x, y) == Edge(a[i], b[i])) continue;
        auto [fxy, fyx] = g.faces_of_edge(x, y);
        std::size_t nbr = (fxy == side) ? fyx : fxy;
        const Face& nf = g.faces()[nbr];
        if (nf.has_step(a[i], b[i]) || nf.has_step(b[i], a[i])) continue;
        targets.push_back(nbr);
      }
    }
    if (targets.size() != 4) {
      throw Error(ErrorKind::InconsistentFaces, "expected 4 satellite neighbor faces");
    }
    for (std::size_t t : targets) g.stellate_face(t, Role::stellation(4));
  }

  // The pole edge, drawn in the outer quadrilateral; the part from A to B
  // (containing t_{k-1}) stays outer.
  g.split_face(g.outer_face_index(), A, B);
  g.validate();

  GadgetGraph out;
  out.graph = std::move(g);
  out.pole_a = A;
  out.pole_b = B;
  for (int i = 0; i < k; ++i) out.terminals.push_back(T(i));
  for (int i = 0; i < k - 1; ++i) out.satellite_edges.push_back({Edge(a[i], b[i]), i});
  out.name = "qk" + std::to_string(k);
  out.check();
  return out;
}

GadgetGraph build_qk_contracted(int k) {
  if (k < 3) throw Error(ErrorKind::InvalidK, "contraction needs k >= 3");
  GadgetGraph q = build_qk(k);
  VertexId t0 = q.terminals.front();
  VertexId tl = q.terminals.back();
  q.graph.remove_edge(q.pole_a, q.pole_b);
  q.graph.contract_pair(t0, tl);
  q.terminals.pop_back();
  q.name = "qk" + std::to_string(k) + "c";
  q.check();
  return q;
}

GadgetGraph build_base_gn(int k, int n_copies) {
  if (n_copies < 1) throw Error(ErrorKind::InvalidN, "need at least one copy");
  GadgetGraph base = build_qk(k);
  GadgetGraph unit = base;  // h: one gadget copy, poles consecutive on its outer face
  for (int copy = 1; copy < n_copies; ++copy) {
    auto vmap = base.graph.attach(Edge(base.pole_a, base.pole_b), unit.graph, unit.pole_a,
                                  unit.pole_b);
    for (int i = 0; i < (int)unit.terminals.size(); ++i) {
      VertexId t = vmap.at(unit.terminals[i]);
      base.graph.set_role(t, Role::terminal(copy * k + i));
      base.terminals.push_back(t);
    }
    for (const auto& [e, seg] : unit.satellite_edges) {
      VertexId x = vmap.at(e.u), y = vmap.at(e.v);
      int gseg = copy * (k - 1) + seg;
      for (VertexId w : {x, y}) {
        Role r = base.graph.role(w);
        base.graph.set_role(w, r.kind == Role::Kind::SatelliteA ? Role::satellite_a(gseg)
                                                                : Role::satellite_b(gseg));
      }
      base.satellite_edges.push_back({Edge(x, y), gseg});
    }
  }
  base.name = "gn" + std::to_string(k) + "x" + std::to_string(n_copies);
  base.check();
  return base;
}

GadgetGraph build_final_g(int k, int n_copies, std::size_t max_vertices) {
  GadgetGraph base = build_base_gn(k, n_copies);
  const GadgetGraph unit = base;  // attach a copy of the base graph itself
  const auto sites = base.satellite_edges;
  GadgetGraph out = std::move(base);
  out.satellite_edges.clear();
  int next_terminal = (int)out.terminals.size();
  int next_segment = (int)sites.size();
  for (const auto& [site, seg] : sites) {
    if (out.graph.num_vertices() + unit.graph.num_vertices() - 2 > max_vertices) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  "attachment would exceed " + std::to_string(max_vertices) + " vertices");
    }
    auto vmap = out.graph.attach(site, unit.graph, unit.pole_a, unit.pole_b);
    for (VertexId t : unit.terminals) {
      VertexId nt = vmap.at(t);
      out.graph.set_role(nt, Role::terminal(next_terminal++));
      out.terminals.push_back(nt);
    }
    for (const auto& [e, _] : unit.satellite_edges) {
      VertexId x = vmap.at(e.u), y = vmap.at(e.v);
      Role rx = out.graph.role(x), ry = out.graph.role(y);
      out.graph.set_role(x, rx.kind == Role::Kind::SatelliteA ? Role::satellite_a(next_segment)
                                                              : Role::satellite_b(next_segment));
      out.graph.set_role(y, ry.kind == Role::Kind::SatelliteA ? Role::satellite_a(next_segment)
                                                              : Role::satellite_b(next_segment));
      out.satellite_edges.push_back({Edge(x, y), next_segment});
      ++next_segment;
    }
  }
  out.name = "final" + std::to_string(k) + "x" + std::to_string(n_copies);
  out.check();
  return out;
}

int dq_distance(const GadgetGraph& q) {
  const PlaneGraph& g = q.graph;
  std::vector<VertexId> verts = g.vertices();
  std::size_t interior = 0;
  for (VertexId v : verts) {
    if (v != q.pole_a && v != q.pole_b) ++interior;
  }
  int best = 0;
  for (VertexId t : q.terminals) {
    std::map<VertexId, int> dist;
    dist[t] = 0;
    std::queue<VertexId> bfs;
    bfs.push(t);
    int far = 0;
    while (!bfs.empty()) {
      VertexId x = bfs.front();
      bfs.pop();
      for (VertexId y : g.neighbors(x)) {
        if (y == q.pole_a || y == q.pole_b || dist.count(y)) continue;
        dist[y] = dist[x] + 1;
        far = std::max(far, dist[y]);
        bfs.push(y);
      }
    }
    if (dist.size() != interior) {
      throw Error(ErrorKind::Disconnected, "graph minus poles is not connected");
    }
    best = std::max(best, far);
  }
  return best;
}

bool is_maximal_planar(const PlaneGraph& g) {
  if (g.num_vertices() < 3) return false;
  if (g.num_edges() != 3 * g.num_vertices() - 6) return false;
  for (const Face& f : g.faces()) {
    if (f.walk.size() != 3) return false;
    if (f.walk[0] == f.walk[1] || f.walk[1] == f.walk[2] || f.walk[0] == f.walk[2]) return false;
  }
  return true;
}

std::vector<std::array<VertexId, 3>> triangle_list(const PlaneGraph& g) {
  std::vector<std::array<VertexId, 3>> out;
  for (const Edge& e : g.edges()) {
    const auto& nu = g.neighbors(e.u);
    const auto& nv = g.neighbors(e.v);
    for (VertexId w : nu) {
      if (w > e.v && nv.count(w)) out.push_back({e.u, e.v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<VertexId, 4>> k4_subgraphs(const PlaneGraph& g) {
  std::vector<std::array<VertexId, 4>> out;
  for (const auto& tri : triangle_list(g)) {
    const auto& n0 = g.neighbors(tri[0]);
    const auto& n1 = g.neighbors(tri[1]);
    const auto& n2 = g.neighbors(tri[2]);
    for (VertexId x : n0) {
      if (x > tri[2] && n1.count(x) && n2.count(x)) out.push_back({tri[0], tri[1], tri[2], x});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bookemb
