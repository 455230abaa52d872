#include "bookemb/encoder.hpp"

#include <algorithm>
#include <set>

namespace bookemb {

namespace {

// The 8 orderings of {a1,a2} x {b1,b2} in which the two pairs alternate.
template <typename F>
void for_each_interleaving(VertexId a1, VertexId a2, VertexId b1, VertexId b2, F&& f) {
  const VertexId as[2] = {a1, a2};
  const VertexId bs[2] = {b1, b2};
  for (int ai = 0; ai < 2; ++ai)
    for (int bi = 0; bi < 2; ++bi) {
      f(as[ai], bs[bi], as[1 - ai], bs[1 - bi]);
      f(bs[bi], as[ai], bs[1 - bi], as[1 - ai]);
    }
}

struct RoleInfo {
  VertexId pole_a = -1;
  VertexId pole_b = -1;
  std::vector<std::pair<std::int32_t, VertexId>> terminals;  // sorted by index

  VertexId terminal(std::int32_t idx) const {
    auto it = std::lower_bound(terminals.begin(), terminals.end(),
                               std::make_pair(idx, VertexId(-1)));
    if (it == terminals.end() || it->first != idx) return -1;
    return it->second;
  }
};

RoleInfo resolve_roles(const PlaneGraph& g) {
  RoleInfo info;
  auto poles = g.vertices_with_role(Role::Kind::Pole);
  if (poles.size() == 2) {
    info.pole_a = poles[0];
    info.pole_b = poles[1];
  }
  for (VertexId v : g.vertices_with_role(Role::Kind::Terminal))
    info.terminals.emplace_back(g.role(v).index, v);
  std::sort(info.terminals.begin(), info.terminals.end());
  for (std::size_t i = 0; i + 1 < info.terminals.size(); ++i)
    if (info.terminals[i].first == info.terminals[i + 1].first)
      throw Error(ErrorKind::ProfileRoleMismatch, "duplicate terminal index");
  return info;
}

void require_poles(const RoleInfo& info) {
  if (info.pole_a < 0)
    throw Error(ErrorKind::ProfileRoleMismatch, "profile needs exactly two pole vertices");
}

Edge pole_terminal_edge(const PlaneGraph& g, VertexId pole, VertexId t) {
  if (!g.has_edge(pole, t))
    throw Error(ErrorKind::ProfileRoleMismatch,
                "terminal " + std::to_string(t) + " is not adjacent to pole " + std::to_string(pole));
  return Edge(pole, t);
}

}  // namespace

bool satisfies(const CnfFormula& cnf, const std::vector<bool>& assign) {
  if (assign.size() < cnf.num_vars + 1)
    throw Error(ErrorKind::UsageError, "assignment shorter than variable count");
  for (std::size_t c = 0; c + 1 < cnf.clause_starts.size(); ++c) {
    bool ok = false;
    for (std::uint32_t i = cnf.clause_starts[c]; i < cnf.clause_starts[c + 1] && !ok; ++i) {
      std::int32_t l = cnf.lits[i];
      ok = l > 0 ? assign[(std::size_t)l] : !assign[(std::size_t)(-l)];
    }
    if (!ok) return false;
  }
  return true;
}

VarMap::VarMap(const PlaneGraph& g, int pages)
    : VarMap(from_lists(g.vertices(), {g.edges().begin(), g.edges().end()}, pages)) {}

VarMap VarMap::from_lists(std::vector<VertexId> verts, std::vector<Edge> edges, int pages) {
  VarMap vm;
  vm.pages_ = pages;
  vm.verts_ = std::move(verts);
  vm.edges_ = std::move(edges);
  vm.init();
  return vm;
}

void VarMap::init() {
  if (pages_ < 1) throw Error(ErrorKind::UsageError, "page count must be >= 1");
  std::sort(verts_.begin(), verts_.end());
  if (!verts_.empty() && verts_.front() < 0)
    throw Error(ErrorKind::UsageError, "negative vertex id in variable map");
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw Error(ErrorKind::UsageError, "duplicate vertex in variable map");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(ErrorKind::UsageError, "duplicate edge in variable map");
  rank_.assign(verts_.empty() ? 0 : (std::size_t)verts_.back() + 1, -1);
  for (std::size_t i = 0; i < verts_.size(); ++i) rank_[(std::size_t)verts_[i]] = (std::int32_t)i;
  for (const Edge& e : edges_) {
    rank(e.u);
    rank(e.v);
    if (e.u == e.v) throw Error(ErrorKind::UsageError, "loop edge in variable map");
  }
  const std::uint64_t n = verts_.size();
  sigma_count_ = (std::uint32_t)(n * (n - 1) / 2);
  const std::uint32_t m = (std::uint32_t)edges_.size();
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j) {
      const Edge& e = edges_[i];
      const Edge& f = edges_[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      chi_ordinal_.emplace((std::uint64_t)i * m + j, (std::uint32_t)indep_.size());
      indep_.emplace_back(i, j);
    }
}

std::uint32_t VarMap::num_vars() const {
  return sigma_count_ + (std::uint32_t)pages_ * (std::uint32_t)edges_.size() +
         (std::uint32_t)indep_.size();
}

std::size_t VarMap::rank(VertexId v) const {
  if (v < 0 || (std::size_t)v >= rank_.size() || rank_[(std::size_t)v] < 0)
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " not in variable map");
  return (std::size_t)rank_[(std::size_t)v];
}

std::size_t VarMap::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e))
    throw Error(ErrorKind::UnknownEdge,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in variable map");
  return (std::size_t)(it - edges_.begin());
}

std::int32_t VarMap::sigma(VertexId u, VertexId v) const {
  std::uint64_t ru = rank(u), rv = rank(v);
  if (ru == rv) throw Error(ErrorKind::UsageError, "order literal needs two distinct vertices");
  bool flip = ru > rv;
  if (flip) std::swap(ru, rv);
  const std::uint64_t n = verts_.size();
  std::uint64_t var = 1 + ru * (n - 1) - ru * (ru - 1) / 2 + (rv - ru - 1);
  return flip ? -(std::int32_t)var : (std::int32_t)var;
}

std::int32_t VarMap::phi(int page, const Edge& e) const {
  if (page < 0 || page >= pages_) throw Error(ErrorKind::WrongPageCount, "page index out of range");
  return (std::int32_t)(sigma_count_ + (std::uint64_t)page * edges_.size() + edge_index(e) + 1);
}

std::int32_t VarMap::chi(const Edge& e, const Edge& f) const {
  std::uint64_t i = edge_index(e), j = edge_index(f);
  if (i > j) std::swap(i, j);
  auto it = chi_ordinal_.find(i * edges_.size() + j);
  if (it == chi_ordinal_.end())
    throw Error(ErrorKind::NotIndependent, "edges share an endpoint or coincide");
  return (std::int32_t)(sigma_count_ + (std::uint64_t)pages_ * edges_.size() + it->second + 1);
}

void emit_order_axioms(const VarMap& vm, CnfFormula& out) {
  const auto& V = vm.vertex_list();
  const std::size_t n = V.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int32_t s_ij = vm.sigma(V[i], V[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::int32_t s_jk = vm.sigma(V[j], V[k]);
        const std::int32_t s_ik = vm.sigma(V[i], V[k]);
        out.add_clause({-s_ij, -s_jk, s_ik});
        out.add_clause({s_ij, s_jk, -s_ik});
      }
    }
}

void emit_page_clauses(const VarMap& vm, CnfFormula& out) {
  std::vector<std::int32_t> clause((std::size_t)vm.pages());
  for (const Edge& e : vm.edge_list()) {
    for (int p = 0; p < vm.pages(); ++p) clause[(std::size_t)p] = vm.phi(p, e);
    out.add_clause(clause.begin(), clause.end());
  }
  for (auto [i, j] : vm.indep_pairs()) {
    const Edge& e = vm.edge_list()[i];
    const Edge& f = vm.edge_list()[j];
    const std::int32_t x = vm.chi(e, f);
    for (int p = 0; p < vm.pages(); ++p)
      out.add_clause({-vm.phi(p, e), -vm.phi(p, f), x});
  }
}

void emit_crossing_clauses(const VarMap& vm, CnfFormula& out) {
  for (auto [i, j] : vm.indep_pairs()) {
    const Edge& e = vm.edge_list()[i];
    const Edge& f = vm.edge_list()[j];
    const std::int32_t nx = -vm.chi(e, f);
    for_each_interleaving(e.u, e.v, f.u, f.v, [&](VertexId a, VertexId b, VertexId c, VertexId d) {
      out.add_clause({nx, -vm.sigma(a, b), -vm.sigma(b, c), -vm.sigma(c, d)});
    });
  }
}

void emit_symmetry_breaking(const PlaneGraph& g, const VarMap& vm, const RestrictionProfile& prof,
                            CnfFormula& out) {
  RoleInfo info = resolve_roles(g);
  if (prof.symmetry_first_vertex) {
    VertexId anchor = info.pole_a >= 0 ? info.pole_a : vm.vertex_list().front();
    for (VertexId v : vm.vertex_list())
      if (v != anchor) out.add_clause({vm.sigma(anchor, v)});
  }
  if (prof.symmetry_terminal_order) {
    VertexId t0 = info.terminal(0);
    if (t0 < 0) throw Error(ErrorKind::ProfileRoleMismatch, "terminal-order rule needs terminal 0");
    for (auto& [idx, t] : info.terminals)
      if (idx != 0) out.add_clause({vm.sigma(t0, t)});
  }
  if (prof.symmetry_reversal) {
    VertexId t1 = info.terminal(1), t2 = info.terminal(2);
    if (t1 < 0 || t2 < 0)
      throw Error(ErrorKind::ProfileRoleMismatch, "reversal rule needs terminals 1 and 2");
    out.add_clause({vm.sigma(t1, t2)});
  }
  if (prof.pin_first_edge_page) {
    require_poles(info);
    VertexId t0 = info.terminal(0);
    if (t0 < 0) throw Error(ErrorKind::ProfileRoleMismatch, "first-edge rule needs terminal 0");
    out.add_clause({vm.phi(0, pole_terminal_edge(g, info.pole_a, t0))});
  }
  if (prof.pin_second_edge_two_pages) {
    require_poles(info);
    VertexId t0 = info.terminal(0);
    if (t0 < 0) throw Error(ErrorKind::ProfileRoleMismatch, "second-edge rule needs terminal 0");
    if (vm.pages() < 2) throw Error(ErrorKind::WrongPageCount, "second-edge rule needs >= 2 pages");
    Edge e = pole_terminal_edge(g, info.pole_b, t0);
    out.add_clause({vm.phi(0, e), vm.phi(1, e)});
  }
  if (prof.k4_not_monochromatic) {
    for (const auto& quad : k4_subgraphs(g)) {
      std::vector<Edge> edges;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) edges.emplace_back(quad[a], quad[b]);
      std::sort(edges.begin(), edges.end());
      for (int p = 0; p < vm.pages(); ++p) {
        std::int32_t c[6];
        for (std::size_t i = 0; i < 6; ++i) c[i] = -vm.phi(p, edges[i]);
        out.add_clause(c, c + 6);
      }
    }
  }
}

void emit_fact_profile(const PlaneGraph& g, const VarMap& vm, FactKind which, CnfFormula& out,
                       bool linear_adjacent) {
  if (vm.pages() != 3) throw Error(ErrorKind::WrongPageCount, "fact profiles are 3-page restrictions");
  RoleInfo info = resolve_roles(g);
  require_poles(info);
  if (info.terminals.empty())
    throw Error(ErrorKind::ProfileRoleMismatch, "fact profiles need terminal vertices");
  const VertexId A = info.pole_a, B = info.pole_b;

  if (which == FactKind::Fact1) {
    if (linear_adjacent) {
      for (VertexId v : vm.vertex_list()) {
        if (v == A || v == B) continue;
        out.add_clause({-vm.sigma(A, v), -vm.sigma(v, B)});
        out.add_clause({-vm.sigma(B, v), -vm.sigma(v, A)});
      }
    } else {
      for (VertexId v : vm.vertex_list())
        if (v != A) out.add_clause({vm.sigma(A, v)});
      for (VertexId v : vm.vertex_list())
        if (v != A && v != B) out.add_clause({vm.sigma(v, B)});
    }
    for (auto& [idx, t] : info.terminals) {
      out.add_clause({vm.phi(0, pole_terminal_edge(g, A, t))});
      out.add_clause({-vm.phi(0, pole_terminal_edge(g, B, t))});
    }
  } else {
    for (std::size_t i = 0; i < info.terminals.size(); ++i)
      for (std::size_t j = i + 1; j < info.terminals.size(); ++j) {
        VertexId ti = info.terminals[i].second, tj = info.terminals[j].second;
        for_each_interleaving(A, B, ti, tj, [&](VertexId a, VertexId b, VertexId c, VertexId d) {
          out.add_clause({-vm.sigma(a, b), -vm.sigma(b, c), -vm.sigma(c, d)});
        });
      }
    for (auto& [idx, t] : info.terminals) {
      out.add_clause({vm.phi(0, pole_terminal_edge(g, A, t))});
      out.add_clause({vm.phi(1, pole_terminal_edge(g, B, t))});
    }
  }
}

void pin_subproblem(const PlaneGraph& g, const VarMap& vm, const SubproblemSpec& spec,
                    CnfFormula& out) {
  RoleInfo info = resolve_roles(g);
  require_poles(info);
  std::set<std::int32_t> listed;
  std::vector<VertexId> chain{info.pole_a};
  for (std::int32_t idx : spec.between) {
    if (!listed.insert(idx).second)
      throw Error(ErrorKind::UsageError, "terminal index listed twice in subproblem");
    VertexId t = info.terminal(idx);
    if (t < 0)
      throw Error(ErrorKind::ProfileRoleMismatch, "no terminal with index " + std::to_string(idx));
    chain.push_back(t);
  }
  chain.push_back(info.pole_b);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    out.add_clause({vm.sigma(chain[i], chain[i + 1])});
  for (auto& [idx, t] : info.terminals)
    if (!listed.count(idx)) out.add_clause({vm.sigma(info.pole_b, t)});
}

std::vector<SubproblemSpec> enumerate_subproblems(const GadgetGraph& q, int max_between,
                                                  bool dedup_reflection) {
  if (max_between < 0) throw Error(ErrorKind::UsageError, "max_between must be >= 0");
  std::vector<std::int32_t> indices;
  for (VertexId t : q.terminals) indices.push_back(q.graph.role(t).index);
  std::sort(indices.begin(), indices.end());
  const int limit = std::min<int>(max_between, (int)indices.size());

  std::vector<SubproblemSpec> out;
  std::vector<std::int32_t> cur;
  std::vector<bool> used(indices.size(), false);
  auto emit = [&]() {
    if (dedup_reflection) {
      std::vector<std::int32_t> rev(cur.rbegin(), cur.rend());
      if (rev < cur) return;
    }
    out.push_back(SubproblemSpec{cur});
  };
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(indices[i]);
      self(self, remaining - 1);
      cur.pop_back();
      used[i] = false;
    }
  };
  for (int len = 0; len <= limit; ++len) rec(rec, len);
  return out;
}

Encoded encode(const PlaneGraph& g, int pages, const RestrictionProfile& profile) {
  if (profile.fact1 && profile.fact2)
    throw Error(ErrorKind::UsageError, "fact1 and fact2 are mutually exclusive");
  if (profile.fact1 && profile.fact1_linear_adjacent)
    throw Error(ErrorKind::UsageError, "pick one fact1 variant");
  if (profile.subproblem && (profile.symmetry_terminal_order || profile.symmetry_reversal))
    throw Error(ErrorKind::UsageError,
                "terminal-order/reversal symmetry contradicts subproblem pinning: the pinned "
                "terminal chain already fixes those choices");
  Encoded enc;
  enc.vars = VarMap(g, pages);
  const VarMap& vm = enc.vars;
  enc.cnf.num_vars = vm.num_vars();

  const std::uint64_t n = vm.n(), m = vm.m(), I = vm.indep_pairs().size(), p = (std::uint64_t)pages;
  const std::uint64_t triples = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
  enc.cnf.reserve(2 * triples + m + (p + 8) * I + 4 * n + 1024,
                  6 * triples + p * m + (3 * p + 32) * I + 8 * n + 4096);

  emit_order_axioms(vm, enc.cnf);
  emit_page_clauses(vm, enc.cnf);
  emit_crossing_clauses(vm, enc.cnf);
  emit_symmetry_breaking(g, vm, profile, enc.cnf);
  if (profile.fact1 || profile.fact1_linear_adjacent)
    emit_fact_profile(g, vm, FactKind::Fact1, enc.cnf, profile.fact1_linear_adjacent);
  if (profile.fact2) emit_fact_profile(g, vm, FactKind::Fact2, enc.cnf);
  if (profile.subproblem) pin_subproblem(g, vm, *profile.subproblem, enc.cnf);
  return enc;
}

BookEmbedding decode_model(const VarMap& vm, const std::vector<bool>& assign) {
  if (assign.size() < vm.num_vars() + 1)
    throw Error(ErrorKind::UsageError, "assignment shorter than variable count");
  auto lit_true = [&](std::int32_t l) {
    return l > 0 ? assign[(std::size_t)l] : !assign[(std::size_t)(-l)];
  };

  const auto& V = vm.vertex_list();
  const std::size_t n = V.size();
  // Position of v = how many vertices precede it; a consistent order gives a
  // permutation of 0..n-1.
  std::vector<VertexId> order(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && lit_true(vm.sigma(V[j], V[i]))) ++pos;
    if (order[pos] != -1)
      throw Error(ErrorKind::InconsistentModel, "order variables contain a cycle");
    order[pos] = V[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!lit_true(vm.sigma(order[i], order[j])))
        throw Error(ErrorKind::InconsistentModel, "order variables contain a cycle");

  BookEmbedding emb;
  emb.order = std::move(order);
  emb.page_count = vm.pages();
  for (const Edge& e : vm.edge_list()) {
    int page = -1;
    for (int p = 0; p < vm.pages() && page < 0; ++p)
      if (assign[(std::size_t)vm.phi(p, e)]) page = p;
    if (page < 0)
      throw Error(ErrorKind::InconsistentModel,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has no page");
    emb.pages[e] = page;
  }
  return emb;
}

}  // namespace bookemb
