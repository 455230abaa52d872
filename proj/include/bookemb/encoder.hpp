#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bookemb/family.hpp"
#include "bookemb/layout.hpp"
#include "bookemb/plane_graph.hpp"

namespace bookemb {

// CNF with 1-based variable ids, stored flat: clause i occupies
// lits[clause_starts[i] .. clause_starts[i+1]).
struct CnfFormula {
  std::uint32_t num_vars = 0;
  std::vector<std::int32_t> lits;
  std::vector<std::uint32_t> clause_starts{0};

  std::size_t num_clauses() const { return clause_starts.size() - 1; }
  void reserve(std::size_t clauses, std::size_t total_lits) {
    clause_starts.reserve(clauses + 1);
    lits.reserve(total_lits);
  }
  void add_clause(std::initializer_list<std::int32_t> c) { add_clause(c.begin(), c.end()); }
  template <typename It>
  void add_clause(It first, It last) {
    if (first == last) throw Error(ErrorKind::UsageError, "empty clause");
    lits.insert(lits.end(), first, last);
    clause_starts.push_back(static_cast<std::uint32_t>(lits.size()));
  }
};

// True iff `assign` (indexed 1..num_vars) satisfies every clause.
bool satisfies(const CnfFormula& cnf, const std::vector<bool>& assign);

// Dense 1-based variable numbering: first the order variables (one per vertex
// pair, canonical direction by ascending id), then the page variables
// (page-major, edges in ascending order), then one variable per independent
// edge pair (lexicographic by edge index).
class VarMap {
 public:
  VarMap() = default;
  VarMap(const PlaneGraph& g, int pages);
  // Same numbering without a graph; vertex/edge lists as for a graph.  Used to
  // rebuild the map from its text sidecar.
  static VarMap from_lists(std::vector<VertexId> verts, std::vector<Edge> edges, int pages);

  int pages() const { return pages_; }
  std::size_t n() const { return verts_.size(); }
  std::size_t m() const { return edges_.size(); }
  const std::vector<VertexId>& vertex_list() const { return verts_; }
  const std::vector<Edge>& edge_list() const { return edges_; }
  // Independent pairs (i, j), i < j, as indices into edge_list().
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& indep_pairs() const { return indep_; }
  std::uint32_t num_vars() const;

  std::size_t rank(VertexId v) const;
  std::size_t edge_index(const Edge& e) const;

  // Literal that is true iff u precedes v on the spine.
  std::int32_t sigma(VertexId u, VertexId v) const;
  // Positive literal: edge e lies on `page` (0-based).
  std::int32_t phi(int page, const Edge& e) const;
  // Positive literal: independent e and f share a page.
  std::int32_t chi(const Edge& e, const Edge& f) const;

 private:
  void init();

  int pages_ = 0;
  std::vector<VertexId> verts_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> rank_;  // by vertex id; -1 = absent
  std::vector<std::pair<std::uint32_t, std::uint32_t>> indep_;
  std::unordered_map<std::uint64_t, std::uint32_t> chi_ordinal_;  // i*m+j -> ordinal
  std::uint32_t sigma_count_ = 0;
};

// Ordered terminal indices required to lie strictly between the poles, in
// this spine order; every other terminal is forced outside.
struct SubproblemSpec {
  std::vector<std::int32_t> between;
};

struct RestrictionProfile {
  bool symmetry_first_vertex = false;     // anchor vertex precedes everything
  bool symmetry_terminal_order = false;   // terminal 0 precedes the others
  bool symmetry_reversal = false;         // terminal 1 precedes terminal 2
  bool pin_first_edge_page = false;       // (A, t0) on page 0
  bool pin_second_edge_two_pages = false; // (B, t0) on page 0 or 1
  bool k4_not_monochromatic = false;      // no K_4 with all 6 edges on one page
  bool fact1 = false;                     // poles consecutive (normalized A first, B last),
                                          // (A,t_i) on page 0, (B,t_i) off page 0
  bool fact1_linear_adjacent = false;     // audit variant: poles adjacent on the line,
                                          // neither endpoint pinned
  bool fact2 = false;                     // terminals on one side of the pole pair,
                                          // (A,t_i) on page 0, (B,t_i) on page 1
  std::optional<SubproblemSpec> subproblem;
};

enum class FactKind { Fact1, Fact2 };

struct Encoded {
  CnfFormula cnf;
  VarMap vars;
};

// For every vertex triple, the two clauses forbidding a cyclic orientation.
void emit_order_axioms(const VarMap& vm, CnfFormula& out);
// Per edge an at-least-one-page clause; per independent pair and page a
// linking clause (same page -> chi).  No at-most-one: the decoder picks the
// lowest true page.
void emit_page_clauses(const VarMap& vm, CnfFormula& out);
// Per independent pair and each of the 8 interleaved endpoint orders:
// not-chi or not-that-interleaving (3 chained order literals).
void emit_crossing_clauses(const VarMap& vm, CnfFormula& out);
void emit_symmetry_breaking(const PlaneGraph& g, const VarMap& vm, const RestrictionProfile& prof,
                            CnfFormula& out);
// Page count must be 3.  `linear_adjacent` selects the audit variant of the
// Fact1 consecutiveness clause (only meaningful for Fact1).
void emit_fact_profile(const PlaneGraph& g, const VarMap& vm, FactKind which, CnfFormula& out,
                       bool linear_adjacent = false);
// Unit order clauses: pole A, the listed terminals in order, pole B form a
// chain; all unlisted terminals come after B.
void pin_subproblem(const PlaneGraph& g, const VarMap& vm, const SubproblemSpec& spec, CnfFormula& out);

// All ordered tuples of distinct terminal indices with length 0..max_between,
// lexicographic by (length, tuple).  With dedup_reflection, a tuple whose
// reverse sorts earlier is dropped (spine-reversal symmetry).
std::vector<SubproblemSpec> enumerate_subproblems(const GadgetGraph& q, int max_between,
                                                  bool dedup_reflection = false);

Encoded encode(const PlaneGraph& g, int pages, const RestrictionProfile& profile);

// Order = vertices sorted by the order variables (checked acyclic); page =
// lowest true page variable per edge.  `assign` is indexed 1..num_vars.
BookEmbedding decode_model(const VarMap& vm, const std::vector<bool>& assign);

}  // namespace bookemb
