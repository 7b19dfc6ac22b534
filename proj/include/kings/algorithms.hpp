#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kings/reach.hpp"
#include "kings/tournament.hpp"

namespace kings {

/// Record of the exclusion attempts made by find_king_inductive at its top
/// level. Attempt order follows the finder's exclusion heuristic; when the
/// finder succeeds the final step has reached_excluded == true, and every
/// earlier step is a failed attempt whose candidate provably cannot reach the
/// excluded vertex in two rounds.
struct ProofTrace {
  struct Step {
    VertexId excluded = 0;        ///< vertex removed for this attempt
    VertexId candidate = 0;       ///< king found for the shrunken instance
    bool reached_excluded = false;
    bool operator==(const Step&) const = default;
  };
  std::vector<Step> steps;  ///< empty when the instance is small enough to brute force
  std::uint32_t depth = 0;  ///< nested instance sizes visited, counting the top call
};

/// Record of the deletion sequence performed by find_rainbow_king. Exactly
/// n - 1 deletions happen for an n-vertex instance; the survivor is the
/// returned king.
struct RainbowTrace {
  struct Deletion {
    VertexId vertex = 0;          ///< deleted pivot, original labeling
    bool red = true;              ///< true if the maximum in-degree was in the red round
    std::uint32_t in_degree = 0;  ///< that in-degree, within the surviving sub-instance
    bool operator==(const Deletion&) const = default;
  };
  std::vector<Deletion> deletions;
};

/// Recursive king finder that mirrors an induction on the vertex count:
/// brute force at n <= 3, otherwise try exclusion vertices j in ascending
/// round-2 out-degree order (ties by index), find a king of the instance with
/// j removed, and keep it if it also reaches j. Sub-instance kings are
/// memoized per active-vertex set for the duration of one call.
///
/// The returned vertex is always a member of forward_kings(t1, t2). Supports
/// n <= 64; cost is exponential in the worst case, so treat this as an
/// illustration of why a king exists rather than a production finder.
std::pair<VertexId, ProofTrace> find_king_inductive(const Tournament& t1, const Tournament& t2);

/// Swaps the two rounds and reverses every edge: (reverse(t2), reverse(t1)).
/// Applying it twice returns the original pair. A vertex is a co-king of
/// (t1, t2) exactly when it is a forward king of the transformed pair.
std::pair<Tournament, Tournament> dual_transform(const Tournament& t1, const Tournament& t2);

/// Finds a vertex mu that every vertex reaches in two rounds, by running
/// find_king_brute on the dual transform and translating the resulting
/// witnesses back to the original instance. witnesses[i] in the returned
/// certificate shows how vertex i reaches mu; validate with
/// validate_co_king_certificate.
std::pair<VertexId, KingCertificate> find_co_king(const Tournament& t1, const Tournament& t2);

/// Finds a rainbow king by repeatedly deleting the vertex of maximum
/// in-degree across both tournaments (ties: red round before blue, then
/// smaller index) until one vertex survives. The survivor is always a member
/// of rainbow_kings(red, blue) but need not be a forward king of (red, blue).
/// If trace is non-null the deletion sequence is recorded there.
VertexId find_rainbow_king(const Tournament& red, const Tournament& blue,
                           RainbowTrace* trace = nullptr);

}  // namespace kings
