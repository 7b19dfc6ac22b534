#include "kings/simulate.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kings {

RoundSchedule make_schedule(std::vector<Tournament> rounds) {
  if (rounds.empty()) throw std::invalid_argument("schedule must contain at least one round");
  for (const auto& t : rounds)
    if (t.n() != rounds.front().n())
      throw std::invalid_argument("schedule mixes vertex counts (" +
                                  std::to_string(rounds.front().n()) + " and " +
                                  std::to_string(t.n()) + ")");
  return RoundSchedule{std::move(rounds)};
}

KnowledgeState initial_state(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("processor count must be at least 1");
  KnowledgeState k;
  k.n = n;
  k.holders.reserve(n);
  for (VertexId i = 0; i < n; ++i) {
    VertexSet s(n);
    s.insert(i);
    k.holders.push_back(std::move(s));
  }
  return k;
}

KnowledgeState step(const KnowledgeState& k, const Tournament& t) {
  if (k.n != t.n())
    throw std::invalid_argument("size mismatch (" + std::to_string(k.n) + " vs " +
                                std::to_string(t.n()) + ")");
  KnowledgeState out = k;
  for (VertexId i = 0; i < k.n; ++i) {
    const VertexSet& before = k.holders[i];
    if (before.is_full()) continue;
    auto dst = out.holders[i].words();
    for_each_bit(before.words(), [&](VertexId p) {
      auto row = t.row(p);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= row[w];
    });
  }
  return out;
}

KnowledgeState run(const RoundSchedule& schedule, std::uint32_t rounds) {
  if (schedule.rounds.empty()) throw std::invalid_argument("schedule must contain at least one round");
  if (rounds > schedule.rounds.size())
    throw std::invalid_argument("cannot run " + std::to_string(rounds) +
                                " rounds: schedule has " +
                                std::to_string(schedule.rounds.size()));
  KnowledgeState k = initial_state(schedule.rounds.front().n());
  for (std::uint32_t r = 0; r < rounds; ++r) k = step(k, schedule.rounds[r]);
  return k;
}

VertexSet kings_after(const KnowledgeState& k) {
  VertexSet kings(k.n);
  for (VertexId i = 0; i < k.n; ++i)
    if (k.holders[i].is_full()) kings.insert(i);
  return kings;
}

std::string serialize_schedule(const RoundSchedule& schedule) {
  std::string out = std::to_string(schedule.rounds.size()) + "\n";
  for (const auto& t : schedule.rounds) out += serialize(t);
  return out;
}

RoundSchedule parse_schedule(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("missing schedule header");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  std::uint32_t count = 0;
  auto [p, ec] = std::from_chars(header.data(), header.data() + header.size(), count);
  if (ec != std::errc{} || p != header.data() + header.size() || count == 0)
    throw std::runtime_error("malformed schedule header '" + header + "'");
  std::vector<Tournament> rounds;
  rounds.reserve(count);
  for (std::uint32_t r = 0; r < count; ++r) rounds.push_back(parse_tournament(in));
  return make_schedule(std::move(rounds));
}

RoundSchedule parse_schedule(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_schedule(in);
}

}  // namespace kings
