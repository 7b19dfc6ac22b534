#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kings/tournament.hpp"

namespace kings {

/// Ordered list of communication rounds. All tournaments share one vertex
/// count and the list is never empty; build instances through make_schedule
/// or parse_schedule to keep those invariants.
struct RoundSchedule {
  std::vector<Tournament> rounds;
};

/// Validates that `rounds` is nonempty and size-consistent.
RoundSchedule make_schedule(std::vector<Tournament> rounds);

/// Who holds what: holders[i] is the set of processors currently holding the
/// item that processor i started with. The diagonal stays set (a processor
/// never forgets its own item) and rows only ever grow.
struct KnowledgeState {
  std::uint32_t n = 0;
  std::vector<VertexSet> holders;
  bool operator==(const KnowledgeState&) const = default;
};

/// Each processor holds exactly its own item.
KnowledgeState initial_state(std::uint32_t n);

/// One synchronous round: every processor sends everything it held *before*
/// the round to each of its out-neighbors in t. Items received during the
/// round are not forwarded until the next one.
KnowledgeState step(const KnowledgeState& k, const Tournament& t);

/// `rounds` successive steps from initial_state through the front of the
/// schedule. rounds may not exceed the schedule length.
KnowledgeState run(const RoundSchedule& schedule, std::uint32_t rounds);

/// Items that have reached every processor: {i : holders[i] is full}. After
/// running the first two rounds of any schedule this equals
/// forward_kings(rounds[0], rounds[1]).
VertexSet kings_after(const KnowledgeState& k);

/// Text format: first line is the round count R, followed by R concatenated
/// tournaments in the tournament text format.
std::string serialize_schedule(const RoundSchedule& schedule);
RoundSchedule parse_schedule(std::istream& in);
RoundSchedule parse_schedule(std::string_view text);

}  // namespace kings
