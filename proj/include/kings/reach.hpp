#pragma once

#include <optional>
#include <vector>

#include "kings/tournament.hpp"

namespace kings {

/// Evidence that i reaches j in two rounds: i = j, a round-1 edge, a
/// round-2 edge, or a round-1 edge into `via` followed by a round-2 edge.
struct ReachWitness {
  enum class Kind { Same, Edge1, Edge2, TwoStep };
  Kind kind = Kind::Same;
  VertexId via = 0;  // TwoStep only

  bool operator==(const ReachWitness&) const = default;
};

/// Evidence that i reaches j by a single edge of either color or a
/// two-edge path using both colors, in either order.
struct RainbowWitness {
  enum class Kind { Same, RedEdge, BlueEdge, RedBlue, BlueRed };
  Kind kind = Kind::Same;
  VertexId via = 0;  // RedBlue / BlueRed only

  bool operator==(const RainbowWitness&) const = default;
};

/// One witness per target vertex that `king` reaches everything
/// (or, for a co-king, that everything reaches it; see find_co_king).
struct KingCertificate {
  VertexId king = 0;
  std::vector<ReachWitness> witnesses;  // indexed by the other endpoint
};

/// Two-round reachability i => j. Returns the first applicable witness in
/// the fixed priority order Same, Edge1, Edge2, TwoStep with smallest via.
/// A two-step path must use a round-1 edge first and a round-2 edge second.
std::optional<ReachWitness> reaches(const Tournament& t1, const Tournament& t2,
                                    VertexId i, VertexId j);

/// The four-conjunct non-reachability test: i != j, both reverse edges
/// present, and the round-1 out-neighborhood of i strictly contained in the
/// round-2 out-neighborhood of j. Computed from row containment directly,
/// not by negating reaches(); the two must agree on every input.
bool blocked(const Tournament& t1, const Tournament& t2, VertexId i, VertexId j);

/// {j : i => j} as one bitset row.
VertexSet reach_set(const Tournament& t1, const Tournament& t2, VertexId i);

/// Vertices that reach every vertex; nonempty for every instance.
VertexSet forward_kings(const Tournament& t1, const Tournament& t2);

/// Vertices reached by every vertex (the intersection of all reach rows).
VertexSet co_kings(const Tournament& t1, const Tournament& t2);

/// Smallest-index forward king with a full witness map.
KingCertificate find_king_brute(const Tournament& t1, const Tournament& t2);

/// Re-derives a single witness from edge tests alone.
bool check_reach_witness(const Tournament& t1, const Tournament& t2,
                         VertexId i, VertexId j, const ReachWitness& w);

/// Checks that every vertex other than cert.king carries a valid witness
/// king -> j. Independent of how the certificate was produced.
bool validate_king_certificate(const Tournament& t1, const Tournament& t2,
                               const KingCertificate& cert);

/// Co-king form: witnesses[i] must prove i => cert.king.
bool validate_co_king_certificate(const Tournament& t1, const Tournament& t2,
                                  const KingCertificate& cert);

/// Rainbow reachability over a red and a blue tournament. Priority order:
/// Same, RedEdge, BlueEdge, RedBlue with smallest via, BlueRed with
/// smallest via. Monochromatic two-step paths never count.
std::optional<RainbowWitness> rainbow_reaches(const Tournament& red, const Tournament& blue,
                                              VertexId i, VertexId j);

bool check_rainbow_witness(const Tournament& red, const Tournament& blue,
                           VertexId i, VertexId j, const RainbowWitness& w);

/// {j : i rainbow-reaches j} as one bitset row.
VertexSet rainbow_reach_set(const Tournament& red, const Tournament& blue, VertexId i);

/// Superset of forward_kings(red, blue); nonempty for every instance.
VertexSet rainbow_kings(const Tournament& red, const Tournament& blue);

}  // namespace kings
