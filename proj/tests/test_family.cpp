#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "bookemb/family.hpp"
#include "doctest.h"

using namespace bookemb;

namespace {

// Independent BFS eccentricity oracle: longest shortest path from any
// terminal to any non-pole vertex in the graph minus both poles.
int terminal_eccentricity_oracle(const GadgetGraph& q) {
  const PlaneGraph& g = q.graph;
  int best = 0;
  for (VertexId t : q.terminals) {
    std::map<VertexId, int> dist;
    std::queue<VertexId> bfs;
    dist[t] = 0;
    bfs.push(t);
    while (!bfs.empty()) {
      VertexId v = bfs.front();
      bfs.pop();
      for (VertexId w : g.neighbors(v)) {
        if (w == q.pole_a || w == q.pole_b || dist.count(w)) continue;
        dist[w] = dist[v] + 1;
        bfs.push(w);
      }
    }
    for (auto& [v, d] : dist) best = std::max(best, d);
  }
  return best;
}

bool is_biconnected(const PlaneGraph& g) {
  // Articulation-vertex check by deletion: small graphs only.
  auto verts = g.vertices();
  if (verts.size() < 3) return false;
  for (VertexId cut : verts) {
    std::set<VertexId> seen{cut};
    std::queue<VertexId> bfs;
    for (VertexId v : verts) {
      if (v != cut) {
        seen.insert(v);
        bfs.push(v);
        break;
      }
    }
    std::size_t reached = 1;
    while (!bfs.empty()) {
      VertexId v = bfs.front();
      bfs.pop();
      for (VertexId w : g.neighbors(v)) {
        if (seen.insert(w).second) {
          ++reached;
          bfs.push(w);
        }
      }
    }
    if (reached != verts.size() - 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gadget size formulas hold for small k") {
  for (int k = 2; k <= 10; ++k) {
    GadgetGraph q = build_qk(k);
    CAPTURE(k);
    CHECK(q.graph.num_vertices() == std::size_t(39 * k - 36));
    CHECK(q.graph.num_edges() == std::size_t(117 * k - 114));
    CHECK(q.graph.num_edges() == 3 * q.graph.num_vertices() - 6);
    CHECK(is_maximal_planar(q.graph));
    CHECK(q.terminals.size() == std::size_t(k));
    CHECK(q.satellite_edges.size() == std::size_t(k - 1));
    CHECK(q.graph.has_edge(q.pole_a, q.pole_b));
    q.graph.validate();
    q.check();
  }
}

TEST_CASE("frozen gadget sizes") {
  GadgetGraph q2 = build_qk(2);
  CHECK(q2.graph.num_vertices() == 42);
  CHECK(q2.graph.num_edges() == 120);

  GadgetGraph q10 = build_qk(10);
  CHECK(q10.graph.num_vertices() == 354);
  CHECK(q10.graph.num_edges() == 1056);
}

TEST_CASE("gadget rejects k < 2") {
  CHECK_THROWS_AS(build_qk(1), Error);
  CHECK_THROWS_AS(build_qk(0), Error);
  CHECK_THROWS_AS(build_qk(-3), Error);
}

TEST_CASE("roles on the gadget") {
  GadgetGraph q = build_qk(8);
  CHECK(q.graph.vertices_with_role(Role::Kind::Terminal).size() == 8);
  auto poles = q.graph.vertices_with_role(Role::Kind::Pole);
  REQUIRE(poles.size() == 2);
  CHECK(poles[0] == q.pole_a);
  CHECK(poles[1] == q.pole_b);
  // Terminal i is adjacent to both poles (K_{2,k} skeleton survives).
  for (VertexId t : q.terminals) {
    CHECK(q.graph.has_edge(q.pole_a, t));
    CHECK(q.graph.has_edge(q.pole_b, t));
  }
  // Satellite edges are real edges tagged by segment, in segment order.
  for (std::size_t i = 0; i < q.satellite_edges.size(); ++i) {
    auto [e, seg] = q.satellite_edges[i];
    CHECK(seg == (int)i);
    CHECK(q.graph.has_edge(e.u, e.v));
  }
}

TEST_CASE("contracted gadget") {
  GadgetGraph c8 = build_qk_contracted(8);
  CHECK(c8.graph.num_vertices() == 275);
  CHECK(c8.graph.num_edges() == 819);
  CHECK(is_maximal_planar(c8.graph));
  CHECK(c8.graph.num_vertices() == build_qk(8).graph.num_vertices() - 1);
  // Pole edge is gone; terminals drop from 8 to 7.
  CHECK_FALSE(c8.graph.has_edge(c8.pole_a, c8.pole_b));
  CHECK(c8.terminals.size() == 7);
  c8.graph.validate();
  c8.check();

  // 39k-37 vertices, 117k-117 edges: pole edge removed, two parallel pairs
  // merged by the terminal identification.
  GadgetGraph c7 = build_qk_contracted(7);
  CHECK(c7.graph.num_vertices() == 236);
  CHECK(c7.graph.num_edges() == 702);
  CHECK(is_maximal_planar(c7.graph));

  CHECK_THROWS_AS(build_qk_contracted(2), Error);
}

TEST_CASE("pole-sharing base graph") {
  GadgetGraph g1 = build_base_gn(10, 2);
  CHECK(g1.graph.num_vertices() == 706);  // 2*352 + 2
  CHECK(g1.graph.num_edges() == 2111);    // 2*1056 - 1 shared pole edge
  CHECK(g1.graph.has_edge(g1.pole_a, g1.pole_b));
  CHECK(g1.terminals.size() == 20);
  CHECK(g1.satellite_edges.size() == 18);  // N(k-1)
  g1.graph.validate();
  g1.check();

  // N=1 degenerates to the plain gadget.
  GadgetGraph g2 = build_base_gn(4, 1);
  GadgetGraph q4 = build_qk(4);
  CHECK(g2.graph.num_vertices() == q4.graph.num_vertices());
  CHECK(g2.graph.num_edges() == q4.graph.num_edges());

  CHECK_THROWS_AS(build_base_gn(4, 0), Error);
}

TEST_CASE("final graph attaches one copy per satellite edge") {
  GadgetGraph g = build_final_g(2, 1);
  // Base 42/120 with one satellite edge; the attachment contributes 40
  // vertices and 119 new edges (its pole edge lands on the satellite edge).
  CHECK(g.graph.num_vertices() == 82);
  CHECK(g.graph.num_edges() == 239);
  g.graph.validate();
  CHECK(is_biconnected(g.graph));

  CHECK_THROWS_AS(build_final_g(10, 3, 500), Error);  // size cap
}

TEST_CASE("terminal eccentricity against an independent BFS oracle") {
  // Consecutive terminals sit at distance 2 (through a shared satellite) and
  // the farthest vertex hangs one step past the extreme terminal, so the
  // metric follows the closed form 2k - 1.
  GadgetGraph q10 = build_qk(10);
  CHECK(dq_distance(q10) == 19);
  CHECK(dq_distance(q10) == terminal_eccentricity_oracle(q10));

  GadgetGraph q2 = build_qk(2);
  CHECK(dq_distance(q2) == 3);
  CHECK(dq_distance(q2) == terminal_eccentricity_oracle(q2));

  GadgetGraph q12 = build_qk(12);
  CHECK(dq_distance(q12) == 23);
  CHECK(dq_distance(q12) == terminal_eccentricity_oracle(q12));

  GadgetGraph c8 = build_qk_contracted(8);
  CHECK(dq_distance(c8) == terminal_eccentricity_oracle(c8));
}

TEST_CASE("triangle and K4 subgraph counts on the gadget") {
  GadgetGraph q2 = build_qk(2);
  // Every face of a maximal planar graph is a triangle; triangle_list sees at
  // least the 80 facial ones.
  auto tris = triangle_list(q2.graph);
  CHECK(tris.size() >= q2.graph.num_faces());
  for (auto& t : tris) {
    CHECK(q2.graph.has_edge(t[0], t[1]));
    CHECK(q2.graph.has_edge(t[1], t[2]));
    CHECK(q2.graph.has_edge(t[0], t[2]));
  }
  auto k4s = k4_subgraphs(q2.graph);
  for (auto& s : k4s) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(q2.graph.has_edge(s[i], s[j]));
  }
}
