#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <vector>

#include "kings/reach.hpp"
#include "kings/simulate.hpp"
#include "kings/tournament.hpp"
#include "kings/verify.hpp"
#include "oracles.hpp"

using namespace kings;

TEST_CASE("initial state is the identity") {
  KnowledgeState k = initial_state(3);
  CHECK(k.n == 3);
  REQUIRE(k.holders.size() == 3);
  for (VertexId i = 0; i < 3; ++i) CHECK(k.holders[i].to_vector() == std::vector<VertexId>{i});
  CHECK_THROWS_AS(initial_state(0), std::invalid_argument);
  CHECK(kings_after(initial_state(1)).to_vector() == std::vector<VertexId>{0});
  CHECK(kings_after(initial_state(2)).empty());
}

TEST_CASE("one step spreads items along edges only") {
  KnowledgeState after = step(initial_state(3), Tournament::transitive(3));
  CHECK(after.holders[0].to_vector() == std::vector<VertexId>{0, 1, 2});
  CHECK(after.holders[1].to_vector() == std::vector<VertexId>{1, 2});
  CHECK(after.holders[2].to_vector() == std::vector<VertexId>{2});
  // processor 0 has no incoming edge, so it still holds only its own item
  for (VertexId i = 1; i < 3; ++i) CHECK(!after.holders[i].contains(0));
}

TEST_CASE("a full state is a fixed point") {
  Tournament cycle = Tournament::rotational(3);
  KnowledgeState full = step(step(initial_state(3), cycle), cycle);
  for (VertexId i = 0; i < 3; ++i) REQUIRE(full.holders[i].is_full());
  for (std::uint64_t s = 0; s < 5; ++s)
    CHECK(step(full, Tournament::uniform_random(3, s)) == full);
}

TEST_CASE("items received in a round are not forwarded within it") {
  // 0 -> 1 -> 2 -> 0: if same-round forwarding happened, item 0 would cross
  // two hops to processor 2 in a single step
  Tournament cycle = Tournament::rotational(3);
  KnowledgeState after = step(initial_state(3), cycle);
  CHECK(after.holders[0].contains(1));
  CHECK(!after.holders[0].contains(2));
}

TEST_CASE("two rounds of the 3-cycle inform everyone") {
  Tournament cycle = Tournament::rotational(3);
  KnowledgeState end = run(make_schedule({cycle, cycle}), 2);
  for (VertexId i = 0; i < 3; ++i) CHECK(end.holders[i].is_full());
  CHECK(kings_after(end).to_vector() == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("run is step iterated from the identity") {
  RoundSchedule s = make_schedule({Tournament::transitive(3), Tournament::rotational(3)});
  CHECK(run(s, 0) == initial_state(3));
  CHECK(run(s, 1) == step(initial_state(3), s.rounds[0]));
  CHECK(run(s, 2) == step(step(initial_state(3), s.rounds[0]), s.rounds[1]));
  CHECK_THROWS_AS(run(s, 3), std::invalid_argument);
}

TEST_CASE("schedules validate their rounds") {
  CHECK_THROWS_AS(make_schedule({}), std::invalid_argument);
  CHECK_THROWS_AS(make_schedule({Tournament::transitive(3), Tournament::transitive(4)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(step(initial_state(3), Tournament::transitive(4)), std::invalid_argument);
}

TEST_CASE("kings after two rounds are exactly the two-round kings") {
  oracle::for_each_instance_pair(3, [](std::uint64_t, std::uint64_t, const Tournament& t1,
                                       const Tournament& t2) {
    KnowledgeState end = run(make_schedule({t1, t2}), 2);
    REQUIRE(kings_after(end).to_vector() == oracle::forward_kings(t1, t2));
    // the full knowledge matrix matches pairwise reachability, not just kings
    for (VertexId i = 0; i < 3; ++i)
      for (VertexId j = 0; j < 3; ++j)
        REQUIRE(end.holders[i].contains(j) == oracle::reaches(t1, t2, i, j));
  });

  for (std::uint64_t s = 0; s < 100; ++s) {
    Tournament t1 = Tournament::uniform_random(64, sample_seed(3, 2 * s));
    Tournament t2 = Tournament::uniform_random(64, sample_seed(3, 2 * s + 1));
    KnowledgeState end = run(make_schedule({t1, t2}), 2);
    REQUIRE(kings_after(end) == forward_kings(t1, t2));
  }
}

TEST_CASE("knowledge grows monotonically and keeps the diagonal") {
  std::vector<Tournament> rounds;
  for (std::uint64_t s = 0; s < 4; ++s) rounds.push_back(Tournament::uniform_random(12, 40 + s));
  RoundSchedule schedule = make_schedule(rounds);
  KnowledgeState prev = initial_state(12);
  for (std::uint32_t r = 1; r <= 4; ++r) {
    KnowledgeState next = run(schedule, r);
    for (VertexId i = 0; i < 12; ++i) {
      CHECK(prev.holders[i].is_subset_of(next.holders[i]));
      CHECK(next.holders[i].contains(i));
    }
    CHECK(kings_after(prev).is_subset_of(kings_after(next)));
    prev = next;
  }
}

TEST_CASE("after two rounds somebody is always a king") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Tournament t1 = Tournament::uniform_random(10, 2 * s + 1);
    Tournament t2 = Tournament::uniform_random(10, 2 * s + 2);
    CHECK(!kings_after(run(make_schedule({t1, t2}), 2)).empty());
  }
}

TEST_CASE("schedule text round-trips") {
  RoundSchedule s = make_schedule({Tournament::transitive(3), Tournament::rotational(3)});
  std::string text = serialize_schedule(s);
  CHECK(text == "2\n3\n011\n001\n000\n3\n010\n001\n100\n");
  RoundSchedule back = parse_schedule(text);
  REQUIRE(back.rounds.size() == 2);
  CHECK(back.rounds[0] == s.rounds[0]);
  CHECK(back.rounds[1] == s.rounds[1]);

  // hex-encoded tournaments may appear inside schedules
  RoundSchedule hexed = parse_schedule("2\n3\nhex:7\n3\n011\n001\n000\n");
  CHECK(hexed.rounds[0] == Tournament::transitive(3));
  CHECK(hexed.rounds[1] == Tournament::transitive(3));
}

TEST_CASE("schedule parse failures carry a reason") {
  CHECK_THROWS_WITH_AS(parse_schedule("x\n"), "malformed schedule header 'x'", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_schedule("0\n"), "malformed schedule header '0'", std::runtime_error);
  CHECK_THROWS_AS(parse_schedule(""), std::runtime_error);
  CHECK_THROWS_AS(parse_schedule("2\n3\n011\n001\n000\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_schedule("2\n3\n011\n001\n000\n4\n0111\n0011\n0001\n0000\n"),
                  std::invalid_argument);
}
