#pragma once

#include <string>

#include "bookemb/family.hpp"
#include "bookemb/layout.hpp"

namespace bookemb {

// Plain-text graph format, line oriented, '#' starts a comment line:
//
//   graph <name> vertices=<N> edges=<M>
//   v <id> <role>
//   e <u> <v>
//   f <w1> <w2> ... <wk> [outer]
//
// One v line per vertex (ascending id), one e line per edge (ascending pairs,
// u < v), one f line per face walk (canonical rotation); exactly one face
// carries the trailing `outer` token.  The declared counts must match the
// reconstructed graph.

struct NamedGraph {
  std::string name;
  PlaneGraph graph;
};

std::string write_graph_text(const PlaneGraph& g, const std::string& name);
NamedGraph parse_graph_text(const std::string& text);

// Rebuilds the pole / terminal / satellite bookkeeping from vertex roles and
// check()s the result.  Poles are ordered by id.
GadgetGraph gadget_from_graph(const NamedGraph& g);

// Embedding format:
//
//   embedding pages=<P>
//   order <v1> <v2> ... <vn>
//   page <p> <u> <v>
//
// One page line per edge, ascending by (u, v).
std::string write_embedding_text(const BookEmbedding& e);
BookEmbedding parse_embedding_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bookemb
