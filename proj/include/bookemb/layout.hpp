#pragma once

#include <map>
#include <string>
#include <vector>

#include "bookemb/plane_graph.hpp"

namespace bookemb {

// A book embedding: spine order plus a page per edge.
struct BookEmbedding {
  std::vector<VertexId> order;
  int page_count = 0;
  std::map<Edge, int> pages;
};

// True iff u and v lie on opposite sides of edge e, i.e. the pairs {u,v} and
// {e.u,e.v} interleave in `order`.  All four vertices must be distinct.
bool opposite_sides(const std::vector<VertexId>& order, VertexId u, VertexId v, Edge e);

// True iff independent edges e and f interleave in `order`.
bool edges_cross(const std::vector<VertexId>& order, Edge e, Edge f);

struct Violation {
  enum class Kind { SamePageCrossing, FourTwist, CrossingPairTwoPages, EdgeCrossingThreePages };
  Kind kind;
  std::vector<Edge> edges;  // witness edges, deterministic order
  std::string note;
};

const char* to_string(Violation::Kind k);

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;
};

// Checks coverage (order covers the vertex set exactly, pages cover the edge
// set exactly, page ids in range) and reports every same-page crossing.
ValidationReport validate_embedding(const PlaneGraph& g, const BookEmbedding& emb);

struct ForbiddenScanReport {
  std::vector<Violation> violations;
  // Pairs where each edge crosses two pages' worth of edges but not the same
  // two edges; logged for inspection, not counted as violations.
  std::vector<Violation> near_misses;
};

// Scans a 3-page embedding for the three forbidden configurations: a 4-twist;
// a crossing pair both crossing the same two edges that lie on two different
// pages; an edge crossing three edges on three different pages.
ForbiddenScanReport forbidden_scan(const PlaneGraph& g, const BookEmbedding& emb);
// Same scan over the embedding's own edge set (no graph cross-check).
ForbiddenScanReport forbidden_scan(const BookEmbedding& emb);

enum class PatternClass { Rainbow, Twist, Necklace, Mixed };
const char* to_string(PatternClass c);

// Classifies an independent pair set against the three canonical patterns:
// rainbow [s_1..s_k, t_k..t_1], twist [s_1..s_k, t_1..t_k], necklace
// [s_1, t_1, ..., s_k, t_k].  Requires >= 2 pairs.
PatternClass classify_pairs(const std::vector<VertexId>& order, const std::vector<Edge>& pairs);

struct MonotoneWitness {
  bool increasing = false;
  std::vector<std::size_t> indices;  // positions into the input sequence
};

// For |seq| >= a*b + 1 over distinct values: an increasing subsequence of
// length a+1 or a decreasing one of length b+1, first-by-position.
MonotoneWitness monotone_subsequence(const std::vector<long long>& seq, int a, int b);

struct ExtractedConfig {
  PatternClass kind = PatternClass::Mixed;
  std::vector<Edge> edges;
};

// From >= r^3 independent pairs extracts an r-rainbow, r-twist or r-necklace
// via the two-stage monotone-subsequence argument.
ExtractedConfig extract_config(const std::vector<VertexId>& order, const std::vector<Edge>& pairs,
                               int r);

}  // namespace bookemb
