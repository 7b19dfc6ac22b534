#include "kings/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace kings {

namespace {

void require_same_size(const Tournament& a, const Tournament& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("size mismatch (" + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
}

[[noreturn]] void kingless_instance(const Tournament& t1, const Tournament& t2) {
  throw std::logic_error("internal error: instance has no two-round king\nT1:\n" + serialize(t1) +
                         "T2:\n" + serialize(t2));
}

// Exclusion-and-recurse king search over sub-instances of one (t1, t2) pair,
// restricted to n <= 64 so an active-vertex set fits in one word. Rows of a
// tournament with n <= 64 occupy exactly one word, which keeps the masked
// reachability test branch-free.
class InductiveSolver {
 public:
  InductiveSolver(const Tournament& t1, const Tournament& t2)
      : t1_(t1), t2_(t2), n_(t1.n()) {
    universe_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::uint64_t universe() const { return universe_; }
  std::uint32_t max_depth() const { return max_depth_; }

  // i reaches j inside the sub-instance given by mask: directly in either
  // round, or through an active midpoint beaten by i in round 1 that beats j
  // in round 2.
  bool masked_reaches(VertexId i, VertexId j, std::uint64_t mask) const {
    if (i == j) return true;
    if (t1_.has_edge(i, j) || t2_.has_edge(i, j)) return true;
    std::uint64_t mids = t1_.row(i)[0] & mask;
    std::uint64_t beats_j_round2 = ~t2_.row(j)[0] & universe_ & ~(std::uint64_t{1} << j);
    return (mids & beats_j_round2) != 0;
  }

  // King of the sub-instance induced by mask, smallest index first for the
  // brute-forced base case. Results are memoized per mask.
  VertexId king_of_mask(std::uint64_t mask, std::uint32_t level) {
    max_depth_ = std::max(max_depth_, level);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int m = std::popcount(mask);
    VertexId king = 0;
    if (m <= 3) {
      bool found = false;
      for (std::uint64_t cs = mask; cs != 0 && !found; cs &= cs - 1) {
        auto i = static_cast<VertexId>(std::countr_zero(cs));
        found = true;
        for (std::uint64_t js = mask; js != 0; js &= js - 1) {
          auto j = static_cast<VertexId>(std::countr_zero(js));
          if (!masked_reaches(i, j, mask)) {
            found = false;
            break;
          }
        }
        if (found) king = i;
      }
      if (!found) kingless_instance(t1_, t2_);
    } else {
      bool found = false;
      for (VertexId j : exclusion_order(mask)) {
        VertexId cand = king_of_mask(mask & ~(std::uint64_t{1} << j), level + 1);
        if (masked_reaches(cand, j, mask)) {
          king = cand;
          found = true;
          break;
        }
      }
      if (!found) kingless_instance(t1_, t2_);
    }
    memo_.emplace(mask, king);
    return king;
  }

  // Active vertices sorted by ascending round-2 out-degree within the
  // sub-instance, ties by ascending index.
  std::vector<VertexId> exclusion_order(std::uint64_t mask) const {
    std::vector<std::pair<std::uint32_t, VertexId>> keyed;
    keyed.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::uint64_t vs = mask; vs != 0; vs &= vs - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(vs));
      keyed.emplace_back(static_cast<std::uint32_t>(std::popcount(t2_.row(v)[0] & mask)), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<VertexId> order;
    order.reserve(keyed.size());
    for (auto& [deg, v] : keyed) order.push_back(v);
    return order;
  }

 private:
  const Tournament& t1_;
  const Tournament& t2_;
  std::uint32_t n_;
  std::uint64_t universe_ = 0;
  std::uint32_t max_depth_ = 0;
  std::unordered_map<std::uint64_t, VertexId> memo_;
};

}  // namespace

std::pair<VertexId, ProofTrace> find_king_inductive(const Tournament& t1, const Tournament& t2) {
  require_same_size(t1, t2);
  const std::uint32_t n = t1.n();
  if (n > 64)
    throw std::invalid_argument("inductive finder supports n <= 64, got n=" + std::to_string(n));
  ProofTrace trace;
  if (n <= 3) {
    VertexSet kings = forward_kings(t1, t2);
    if (kings.empty()) kingless_instance(t1, t2);
    trace.depth = 1;
    return {kings.to_vector().front(), trace};
  }
  InductiveSolver solver(t1, t2);
  for (VertexId j : solver.exclusion_order(solver.universe())) {
    VertexId cand = solver.king_of_mask(solver.universe() & ~(std::uint64_t{1} << j), 2);
    bool ok = solver.masked_reaches(cand, j, solver.universe());
    trace.steps.push_back({j, cand, ok});
    if (ok) {
      trace.depth = std::max(solver.max_depth(), std::uint32_t{1});
      return {cand, trace};
    }
  }
  kingless_instance(t1, t2);
}

std::pair<Tournament, Tournament> dual_transform(const Tournament& t1, const Tournament& t2) {
  require_same_size(t1, t2);
  return {t2.reversed(), t1.reversed()};
}

std::pair<VertexId, KingCertificate> find_co_king(const Tournament& t1, const Tournament& t2) {
  auto [d1, d2] = dual_transform(t1, t2);
  KingCertificate dual_cert = find_king_brute(d1, d2);
  // A step the dual king takes toward j maps to a step j takes toward the
  // king in the original instance, with the two rounds swapped: a round-1
  // dual edge is a reversed round-2 original edge and vice versa, and a
  // two-step midpoint serves both directions unchanged.
  KingCertificate cert{dual_cert.king, dual_cert.witnesses};
  for (auto& w : cert.witnesses) {
    if (w.kind == ReachWitness::Kind::Edge1)
      w.kind = ReachWitness::Kind::Edge2;
    else if (w.kind == ReachWitness::Kind::Edge2)
      w.kind = ReachWitness::Kind::Edge1;
  }
  return {cert.king, cert};
}

VertexId find_rainbow_king(const Tournament& red, const Tournament& blue, RainbowTrace* trace) {
  require_same_size(red, blue);
  const std::uint32_t n = red.n();
  if (trace) trace->deletions.clear();
  VertexSet active = VertexSet::full(n);
  std::vector<std::uint64_t> scratch(red.words_per_row());
  auto in_degree_within = [&](const Tournament& t, VertexId v) {
    auto row = t.row(v);
    auto act = active.words();
    std::uint32_t c = 0;
    for (std::size_t w = 0; w < scratch.size(); ++w)
      c += static_cast<std::uint32_t>(std::popcount(~row[w] & act[w]));
    return c - 1;  // the complement of v's out-row contains v itself
  };
  for (std::uint32_t remaining = n; remaining > 1; --remaining) {
    VertexId best_v = 0;
    bool best_red = true;
    std::uint32_t best_deg = 0;
    bool have = false;
    // Ties at equal in-degree: red beats blue, then (by visiting vertices in
    // ascending order and never replacing on a full tie) smaller index wins.
    auto better = [&](std::uint32_t deg, bool is_red) {
      if (!have) return true;
      if (deg != best_deg) return deg > best_deg;
      return is_red && !best_red;
    };
    for (VertexId v : active.to_vector()) {
      std::uint32_t dr = in_degree_within(red, v);
      std::uint32_t db = in_degree_within(blue, v);
      if (better(dr, true)) {
        best_v = v;
        best_red = true;
        best_deg = dr;
        have = true;
      }
      if (better(db, false)) {
        best_v = v;
        best_red = false;
        best_deg = db;
      }
    }
    active.erase(best_v);
    if (trace) trace->deletions.push_back({best_v, best_red, best_deg});
  }
  return active.to_vector().front();
}

}  // namespace kings
