#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bookemb/plane_graph.hpp"

namespace bookemb {

// A plane graph with two designated poles, an indexed terminal list and the
// satellite edges (a_i, b_i) that serve as attachment sites.
struct GadgetGraph {
  PlaneGraph graph;
  VertexId pole_a = -1;
  VertexId pole_b = -1;
  std::vector<VertexId> terminals;                    // ascending terminal index
  std::vector<std::pair<Edge, int>> satellite_edges;  // (edge, segment index)
  std::string name;

  // Role/pole/terminal consistency plus: every satellite edge lies on exactly
  // two triangular faces.  Throws on violation.
  void check() const;
};

// The k-terminal gadget: K_{2,k} skeleton, one 3-edge path per bounded
// quadrilateral, triangulation, two full stellation rounds, 8 + 4 targeted
// stellations per segment, and the pole edge.  39k-36 vertices, 117k-114
// edges, maximal planar.  k >= 2.
GadgetGraph build_qk(int k);

// Variant with the pole edge removed and the two extreme terminals
// identified; for k=8 this is the 275-vertex, 819-edge graph.  k >= 3.
GadgetGraph build_qk_contracted(int k);

// n_copies copies of the k-gadget sharing both poles and the pole edge.
GadgetGraph build_base_gn(int k, int n_copies);

// Base graph with a copy of itself attached along every satellite edge.
GadgetGraph build_final_g(int k, int n_copies, std::size_t max_vertices = 1000000);

// max over terminals t of max over v (poles deleted) of dist(t, v).
int dq_distance(const GadgetGraph& q);

bool is_maximal_planar(const PlaneGraph& g);

std::vector<std::array<VertexId, 3>> triangle_list(const PlaneGraph& g);

// Vertex sets of K_4 subgraphs, each reported once, ascending.
std::vector<std::array<VertexId, 4>> k4_subgraphs(const PlaneGraph& g);

}  // namespace bookemb
