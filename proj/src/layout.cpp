#include "bookemb/layout.hpp"

#include <algorithm>
#include <cstdint>

namespace bookemb {

const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::SamePageCrossing: return "same-page-crossing";
    case Violation::Kind::FourTwist: return "four-twist";
    case Violation::Kind::CrossingPairTwoPages: return "crossing-pair-two-pages";
    case Violation::Kind::EdgeCrossingThreePages: return "edge-crossing-three-pages";
  }
  return "violation";
}

const char* to_string(PatternClass c) {
  switch (c) {
    case PatternClass::Rainbow: return "rainbow";
    case PatternClass::Twist: return "twist";
    case PatternClass::Necklace: return "necklace";
    case PatternClass::Mixed: return "mixed";
  }
  return "mixed";
}

namespace {

std::map<VertexId, int> positions(const std::vector<VertexId>& order) {
  std::map<VertexId, int> pos;
  for (int i = 0; i < (int)order.size(); ++i) {
    if (!pos.emplace(order[i], i).second) {
      throw Error(ErrorKind::CoverageMismatch, "vertex repeated in spine order");
    }
  }
  return pos;
}

int pos_of(const std::map<VertexId, int>& pos, VertexId v) {
  auto it = pos.find(v);
  if (it == pos.end()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " not on the spine");
  }
  return it->second;
}

bool interleave(int a1, int a2, int b1, int b2) {
  if (a1 > a2) std::swap(a1, a2);
  if (b1 > b2) std::swap(b1, b2);
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

}  // namespace

bool opposite_sides(const std::vector<VertexId>& order, VertexId u, VertexId v, Edge e) {
  if (u == v || u == e.u || u == e.v || v == e.u || v == e.v) {
    throw Error(ErrorKind::SharedVertex, "opposite_sides needs four distinct vertices");
  }
  auto pos = positions(order);
  return interleave(pos_of(pos, u), pos_of(pos, v), pos_of(pos, e.u), pos_of(pos, e.v));
}

bool edges_cross(const std::vector<VertexId>& order, Edge e, Edge f) {
  if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) {
    throw Error(ErrorKind::NotIndependent, "edges share an endpoint");
  }
  auto pos = positions(order);
  return interleave(pos_of(pos, e.u), pos_of(pos, e.v), pos_of(pos, f.u), pos_of(pos, f.v));
}

namespace {

void check_coverage(const PlaneGraph& g, const BookEmbedding& emb) {
  if (emb.page_count < 1) throw Error(ErrorKind::WrongPageCount, "page count must be >= 1");
  std::set<VertexId> on_spine(emb.order.begin(), emb.order.end());
  if (on_spine.size() != emb.order.size()) {
    throw Error(ErrorKind::CoverageMismatch, "vertex repeated in spine order");
  }
  std::vector<VertexId> vs = g.vertices();
  if (on_spine != std::set<VertexId>(vs.begin(), vs.end())) {
    throw Error(ErrorKind::CoverageMismatch, "spine order does not cover the vertex set");
  }
  if (emb.pages.size() != g.num_edges()) {
    throw Error(ErrorKind::CoverageMismatch, "page assignment does not cover the edge set");
  }
  for (const auto& [e, p] : emb.pages) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorKind::CoverageMismatch, "page assigned to a non-edge");
    }
    if (p < 0 || p >= emb.page_count) {
      throw Error(ErrorKind::CoverageMismatch, "page id out of range");
    }
  }
}

}  // namespace

ValidationReport validate_embedding(const PlaneGraph& g, const BookEmbedding& emb) {
  check_coverage(g, emb);
  auto pos = positions(emb.order);
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  ValidationReport rep;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const Edge &e = es[i], &f = es[j];
      if (emb.pages.at(e) != emb.pages.at(f)) continue;
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (interleave(pos.at(e.u), pos.at(e.v), pos.at(f.u), pos.at(f.v))) {
        rep.violations.push_back(Violation{Violation::Kind::SamePageCrossing,
                                           {e, f},
                                           "page " + std::to_string(emb.pages.at(e))});
      }
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

namespace {

ForbiddenScanReport forbidden_scan_impl(const std::vector<VertexId>& order, const std::vector<Edge>& es,
                              const std::vector<int>& page) {
  auto pos = positions(order);
  const std::size_t m = es.size();

  // Crossing graph over all edges, page-blind.
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> cross(m * words, 0);
  auto set_bit = [&](std::size_t i, std::size_t j) { cross[i * words + j / 64] |= 1ull << (j % 64); };
  std::vector<std::vector<std::size_t>> nbr(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge &e = es[i], &f = es[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (interleave(pos_of(pos, e.u), pos_of(pos, e.v), pos_of(pos, f.u), pos_of(pos, f.v))) {
        set_bit(i, j);
        set_bit(j, i);
        nbr[i].push_back(j);
        nbr[j].push_back(i);
      }
    }
  }

  ForbiddenScanReport rep;

  // (i) 4-twists = 4-cliques in the crossing graph, found once via their two
  // lowest-index edges.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : nbr[i]) {
      if (j <= i) continue;
      std::vector<std::size_t> common;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t x = cross[i * words + w] & cross[j * words + w];
        while (x) {
          std::size_t bit = (std::size_t)__builtin_ctzll(x);
          x &= x - 1;
          std::size_t idx = w * 64 + bit;
          if (idx > j) common.push_back(idx);
        }
      }
      for (std::size_t a = 0; a < common.size(); ++a) {
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          std::size_t x = common[a], y = common[b];
          if (cross[x * words + y / 64] >> (y % 64) & 1) {
            rep.violations.push_back(
                Violation{Violation::Kind::FourTwist, {es[i], es[j], es[x], es[y]}, ""});
          }
        }
      }
    }
  }

  // (ii) crossing pair both crossing the same two differently-paged edges;
  // near miss: each side crosses two pages' worth of edges, but not the same
  // two edges.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : nbr[i]) {
      if (j <= i) continue;
      std::size_t first = m, second = m;
      for (std::size_t w = 0; w < words && second == m; ++w) {
        std::uint64_t x = cross[i * words + w] & cross[j * words + w];
        while (x) {
          std::size_t bit = (std::size_t)__builtin_ctzll(x);
          x &= x - 1;
          std::size_t idx = w * 64 + bit;
          if (first == m) {
            first = idx;
          } else if (page[idx] != page[first]) {
            second = idx;
            break;
          }
        }
      }
      if (second != m) {
        rep.violations.push_back(Violation{Violation::Kind::CrossingPairTwoPages,
                                           {es[i], es[j], es[first], es[second]},
                                           ""});
      } else {
        auto two_pages = [&](std::size_t v) {
          int seen = -1;
          for (std::size_t x : nbr[v]) {
            if (seen == -1) {
              seen = page[x];
            } else if (page[x] != seen) {
              return true;
            }
          }
          return false;
        };
        if (two_pages(i) && two_pages(j)) {
          rep.near_misses.push_back(
              Violation{Violation::Kind::CrossingPairTwoPages, {es[i], es[j]}, "near miss"});
        }
      }
    }
  }

  // (iii) an edge crossing three edges on three different pages.
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t witness[3];
    bool have[3] = {false, false, false};
    for (std::size_t j : nbr[i]) {
      if (!have[page[j]]) {
        have[page[j]] = true;
        witness[page[j]] = j;
      }
    }
    if (have[0] && have[1] && have[2]) {
      rep.violations.push_back(Violation{Violation::Kind::EdgeCrossingThreePages,
                                         {es[i], es[witness[0]], es[witness[1]], es[witness[2]]},
                                         ""});
    }
  }
  return rep;
}

}  // namespace

ForbiddenScanReport forbidden_scan(const PlaneGraph& g, const BookEmbedding& emb) {
  if (emb.page_count != 3) {
    throw Error(ErrorKind::WrongPageCount, "scan is defined for 3-page embeddings");
  }
  check_coverage(g, emb);
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  std::vector<int> page(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) page[i] = emb.pages.at(es[i]);
  return forbidden_scan_impl(emb.order, es, page);
}

ForbiddenScanReport forbidden_scan(const BookEmbedding& emb) {
  if (emb.page_count != 3) {
    throw Error(ErrorKind::WrongPageCount, "scan is defined for 3-page embeddings");
  }
  std::vector<Edge> es;
  std::vector<int> page;
  for (const auto& [e, p] : emb.pages) {
    if (p < 0 || p > 2) throw Error(ErrorKind::CoverageMismatch, "page id out of range");
    es.push_back(e);
    page.push_back(p);
  }
  return forbidden_scan_impl(emb.order, es, page);
}

namespace {

struct SpinePair {
  int s, t;     // positions, s < t
  Edge edge;
};

std::vector<SpinePair> normalized_pairs(const std::vector<VertexId>& order,
                                        const std::vector<Edge>& pairs) {
  auto pos = positions(order);
  std::set<VertexId> seen;
  std::vector<SpinePair> out;
  for (const Edge& e : pairs) {
    if (e.u == e.v) throw Error(ErrorKind::NotIndependent, "degenerate pair");
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) {
      throw Error(ErrorKind::NotIndependent, "pairs share an endpoint");
    }
    int a = pos_of(pos, e.u), b = pos_of(pos, e.v);
    out.push_back(SpinePair{std::min(a, b), std::max(a, b), e});
  }
  std::sort(out.begin(), out.end(), [](const SpinePair& x, const SpinePair& y) { return x.s < y.s; });
  return out;
}

}  // namespace

PatternClass classify_pairs(const std::vector<VertexId>& order, const std::vector<Edge>& pairs) {
  if (pairs.size() < 2) throw Error(ErrorKind::TooFewPairs, "need at least 2 pairs");
  auto ps = normalized_pairs(order, pairs);
  const std::size_t k = ps.size();
  // Sorted by left endpoint: pairwise nested (rainbow) means right endpoints
  // strictly descend; twist means they ascend and every left precedes every
  // right; necklace means each pair closes before the next opens.
  bool rainbow = true, twist = true, necklace = true;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!(ps[i + 1].t < ps[i].t)) rainbow = false;
    if (!(ps[i].t < ps[i + 1].t)) twist = false;
    if (!(ps[i].t < ps[i + 1].s)) necklace = false;
  }
  if (twist && !(ps[k - 1].s < ps[0].t)) twist = false;
  if (rainbow) return PatternClass::Rainbow;
  if (twist) return PatternClass::Twist;
  if (necklace) return PatternClass::Necklace;
  return PatternClass::Mixed;
}

MonotoneWitness monotone_subsequence(const std::vector<long long>& seq, int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::UsageError, "bounds must be positive");
  const std::size_t n = seq.size();
  if (n < (std::size_t)a * (std::size_t)b + 1) {
    throw Error(ErrorKind::TooShort, "need length >= a*b+1");
  }
  std::vector<int> inc(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (seq[j] < seq[i]) inc[i] = std::max(inc[i], inc[j] + 1);
    }
  }
  // First position reaching length a+1 ends an increasing witness.
  for (std::size_t i = 0; i < n; ++i) {
    if (inc[i] >= a + 1) {
      std::vector<std::size_t> w(a + 1);
      std::size_t cur = i;
      w[a] = cur;
      for (int need = a; need >= 1; --need) {
        for (std::size_t j = 0; j < cur; ++j) {
          if (inc[j] == need && seq[j] < seq[cur]) {
            cur = j;
            break;
          }
        }
        w[need - 1] = cur;
      }
      return MonotoneWitness{true, std::move(w)};
    }
  }
  // All classes <= a: some class holds b+1 positions; equal-class elements
  // are pairwise non-increasing (strictly decreasing for distinct values).
  for (int v = 1; v <= a; ++v) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < n && w.size() < (std::size_t)b + 1; ++i) {
      if (inc[i] == v) w.push_back(i);
    }
    if (w.size() == (std::size_t)b + 1) return MonotoneWitness{false, std::move(w)};
  }
  throw Error(ErrorKind::TooShort, "pigeonhole failed; duplicate values in input?");
}

ExtractedConfig extract_config(const std::vector<VertexId>& order, const std::vector<Edge>& pairs,
                               int r) {
  if (r < 2) throw Error(ErrorKind::UsageError, "r must be >= 2");
  if (pairs.size() < (std::size_t)r * r * r) {
    throw Error(ErrorKind::TooFewPairs, "need at least r^3 pairs");
  }
  auto ps = normalized_pairs(order, pairs);
  std::vector<long long> ends;
  ends.reserve(ps.size());
  for (const auto& p : ps) ends.push_back(p.t);

  auto w = monotone_subsequence(ends, r * r, r - 1);
  ExtractedConfig out;
  if (!w.increasing) {
    // starts ascending, ends descending: pairwise nested.
    out.kind = PatternClass::Rainbow;
    for (std::size_t i : w.indices) out.edges.push_back(ps[i].edge);
  } else {
    // r^2+1 pairwise non-nested pairs; chain/antichain of the
    // "ends-strictly-before" order gives a necklace or a twist.
    std::vector<SpinePair> sel;
    for (std::size_t i : w.indices) sel.push_back(ps[i]);
    const std::size_t n = sel.size();
    std::vector<int> h(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (sel[j].t < sel[i].s) h[i] = std::max(h[i], h[j] + 1);
      }
    }
    std::size_t top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (h[i] > h[top]) top = i;
    }
    if (h[top] >= r) {
      std::vector<std::size_t> chain;
      std::size_t cur = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (h[i] >= r) {
          cur = i;
          break;
        }
      }
      chain.push_back(cur);
      for (int need = h[cur] - 1; (int)chain.size() < r; --need) {
        for (std::size_t j = 0; j < cur; ++j) {
          if (h[j] == need && sel[j].t < sel[cur].s) {
            cur = j;
            break;
          }
        }
        chain.push_back(cur);
      }
      std::reverse(chain.begin(), chain.end());
      out.kind = PatternClass::Necklace;
      for (std::size_t i : chain) out.edges.push_back(sel[i].edge);
    } else {
      // Heights bounded by r-1: the fullest height class has >= r members,
      // pairwise overlapping and non-nested, i.e. a twist.
      int best_v = 1;
      std::size_t best_count = 0;
      for (int v = 1; v < r; ++v) {
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (h[i] == v) ++cnt;
        }
        if (cnt > best_count) {
          best_count = cnt;
          best_v = v;
        }
      }
      out.kind = PatternClass::Twist;
      for (std::size_t i = 0; i < n && out.edges.size() < (std::size_t)r; ++i) {
        if (h[i] == best_v) out.edges.push_back(sel[i].edge);
      }
    }
  }
  if (classify_pairs(order, out.edges) != out.kind || out.edges.size() != (std::size_t)r) {
    throw Error(ErrorKind::InconsistentModel, "extracted configuration failed re-check");
  }
  return out;
}

}  // namespace bookemb
