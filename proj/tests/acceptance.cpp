// Acceptance harness: one pass/fail line per criterion on stdout, failure
// reasons on stderr, exit code = number of failed criteria. All tolerances and
// seeds are pinned below.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "kings/reach.hpp"
#include "kings/simulate.hpp"
#include "kings/tournament.hpp"
#include "kings/verify.hpp"
#include "oracles.hpp"

using namespace kings;

namespace {

constexpr std::uint64_t kRandomSeed = 20260824;        // seed for every random-mode run
constexpr std::uint64_t kLargeSampleCount = 1'000'000; // n=5 two-round-king sweep
constexpr std::uint64_t kSmallSampleCount = 10'000;    // all other random sweeps
constexpr double kSweepTimeLimitSeconds = 300.0;       // full n=4 exhaustive sweep budget
constexpr double kSearchTimeLimitSeconds = 600.0;      // n=4 order-sensitivity search budget
constexpr double kPerfTimeLimitSeconds = 2.0;          // single large-instance operation budget

struct Check {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void expect_clean_exhaustive(Check& c, std::uint32_t n, ClaimKind claim,
                             std::uint64_t expected_instances, double* wall_out = nullptr) {
  VerificationReport r = exhaustive_verify(n, claim);
  c.expect(r.passed(), std::string(claim_name(claim)) + " exhaustive n=" + std::to_string(n) +
                           " reported " + std::to_string(r.failures) + " failures");
  c.expect(r.instances_checked == expected_instances,
           std::string(claim_name(claim)) + " exhaustive n=" + std::to_string(n) + " checked " +
               std::to_string(r.instances_checked) + " instances, expected " +
               std::to_string(expected_instances));
  if (wall_out) *wall_out = r.wall_time_seconds;
}

void expect_clean_random(Check& c, std::uint32_t n, std::uint64_t samples, ClaimKind claim) {
  VerificationReport r = random_verify(n, samples, kRandomSeed, claim);
  c.expect(r.passed(), std::string(claim_name(claim)) + " random n=" + std::to_string(n) +
                           " reported " + std::to_string(r.failures) + " failures");
  c.expect(r.instances_checked == samples, "random run checked the wrong number of samples");
}

// 1. A two-round king exists on every instance pair: exhaustive through n=4,
//    one million seeded samples at n=5, with the n=4 sweep inside its budget.
Check criterion_forward_king() {
  Check c;
  expect_clean_exhaustive(c, 2, ClaimKind::ForwardKingExists, 4);
  expect_clean_exhaustive(c, 3, ClaimKind::ForwardKingExists, 64);
  double n4_wall = 0.0;
  expect_clean_exhaustive(c, 4, ClaimKind::ForwardKingExists, 4096, &n4_wall);
  c.expect(n4_wall < kSweepTimeLimitSeconds,
           "n=4 sweep took " + std::to_string(n4_wall) + "s, budget " +
               std::to_string(kSweepTimeLimitSeconds) + "s");
  expect_clean_random(c, 5, kLargeSampleCount, ClaimKind::ForwardKingExists);
  return c;
}

// 2. A co-king exists, and the co-king set equals the forward kings of the
//    dual instance, exhaustive through n=4.
Check criterion_co_king_and_dual() {
  Check c;
  for (std::uint32_t n = 2; n <= 4; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (2 * pair_count(n));
    expect_clean_exhaustive(c, n, ClaimKind::CoKingExists, total);
    expect_clean_exhaustive(c, n, ClaimKind::DualTransformSound, total);
  }
  return c;
}

// 3. The blocking condition is equivalent to non-reachability on every ordered
//    vertex pair: exhaustive through n=4 plus seeded samples at n=32.
Check criterion_reach_blocked() {
  Check c;
  for (std::uint32_t n = 2; n <= 4; ++n)
    expect_clean_exhaustive(c, n, ClaimKind::ReachBlockedEquivalence,
                            std::uint64_t{1} << (2 * pair_count(n)));
  expect_clean_random(c, 32, kSmallSampleCount, ClaimKind::ReachBlockedEquivalence);
  return c;
}

// 4. Two simulated rounds inform exactly the two-round kings: exhaustive at
//    n=3 plus seeded samples at n=64.
Check criterion_simulator() {
  Check c;
  expect_clean_exhaustive(c, 3, ClaimKind::SimulatorAgreement, 64);
  expect_clean_random(c, 64, kSmallSampleCount, ClaimKind::SimulatorAgreement);
  return c;
}

// 5. Both constructive finders return genuine kings: the exclusion-based
//    finder exhaustively at n=4 and on samples for each n in 4..10, the
//    deletion-based finder exhaustively through n=4 and on samples at n=64.
Check criterion_finders() {
  Check c;
  expect_clean_exhaustive(c, 4, ClaimKind::InductiveFinderSound, 4096);
  for (std::uint32_t n = 4; n <= 10; ++n)
    expect_clean_random(c, n, kSmallSampleCount, ClaimKind::InductiveFinderSound);
  for (std::uint32_t n = 2; n <= 4; ++n)
    expect_clean_exhaustive(c, n, ClaimKind::RainbowFinderSound,
                            std::uint64_t{1} << (2 * pair_count(n)));
  expect_clean_random(c, 64, kSmallSampleCount, ClaimKind::RainbowFinderSound);
  return c;
}

// 6. Every maximum-out-degree vertex is a two-round king of the mirrored
//    pair, over all single tournaments with n <= 5.
Check criterion_landau() {
  Check c;
  for (std::uint32_t n = 1; n <= 5; ++n)
    expect_clean_exhaustive(c, n, ClaimKind::LandauSpecialCase,
                            std::uint64_t{1} << pair_count(n));
  return c;
}

// 7. The order-sensitivity search completes at n=3 and n=4, its witnesses
//    re-check against the scalar reference definitions, absence claims come
//    only from full scans, and the n=4 search fits its budget.
Check criterion_search() {
  Check c;

  OrderSensitivityResult none = search_order_sensitivity(2);
  c.expect(none.complete && !none.hit && none.instances_scanned == 4,
           "n=2 search should scan all 4 pairs and find nothing");
  bool scalar_absence = true;
  oracle::for_each_instance_pair(2, [&](std::uint64_t, std::uint64_t, const Tournament& a,
                                        const Tournament& b) {
    auto rainbow = oracle::rainbow_kings(a, b);
    auto forward = oracle::forward_kings(a, b);
    for (VertexId v : rainbow)
      if (std::find(forward.begin(), forward.end(), v) == forward.end()) scalar_absence = false;
  });
  c.expect(scalar_absence, "scalar reference disagrees with the n=2 absence claim");

  auto check_hit = [&](std::uint32_t n, double* wall_out) {
    auto start = std::chrono::steady_clock::now();
    OrderSensitivityResult res = search_order_sensitivity(n);
    if (wall_out) *wall_out = seconds_since(start);
    c.expect(res.complete, "n=" + std::to_string(n) + " search did not complete");
    c.expect(res.hit.has_value(), "n=" + std::to_string(n) + " search found no witness");
    if (!res.hit) return;
    Tournament t1 = Tournament::from_index({n, res.hit->code1});
    Tournament t2 = Tournament::from_index({n, res.hit->code2});
    auto rainbow = oracle::rainbow_kings(t1, t2);
    auto forward = oracle::forward_kings(t1, t2);
    bool separates =
        std::find(rainbow.begin(), rainbow.end(), res.hit->vertex) != rainbow.end() &&
        std::find(forward.begin(), forward.end(), res.hit->vertex) == forward.end();
    c.expect(separates,
             "n=" + std::to_string(n) + " witness failed the scalar reference re-check");
  };
  check_hit(3, nullptr);
  double n4_wall = 0.0;
  check_hit(4, &n4_wall);
  c.expect(n4_wall < kSearchTimeLimitSeconds,
           "n=4 search took " + std::to_string(n4_wall) + "s, budget " +
               std::to_string(kSearchTimeLimitSeconds) + "s");
  return c;
}

// 8. Word-parallel row operations keep large instances fast: the king set of
//    one n=1024 pair and one n=4096 simulation round each under 2 seconds.
Check criterion_performance() {
  Check c;

  Tournament big1 = Tournament::uniform_random(1024, kRandomSeed);
  Tournament big2 = Tournament::uniform_random(1024, kRandomSeed + 1);
  auto start = std::chrono::steady_clock::now();
  VertexSet kings = forward_kings(big1, big2);
  double kings_wall = seconds_since(start);
  c.expect(kings_wall < kPerfTimeLimitSeconds,
           "forward king set at n=1024 took " + std::to_string(kings_wall) + "s");
  c.expect(!kings.empty(), "n=1024 instance unexpectedly has no king");

  Tournament round1 = Tournament::uniform_random(4096, kRandomSeed + 2);
  Tournament round2 = Tournament::uniform_random(4096, kRandomSeed + 3);
  KnowledgeState mid = step(initial_state(4096), round1);
  start = std::chrono::steady_clock::now();
  KnowledgeState end = step(mid, round2);
  double step_wall = seconds_since(start);
  c.expect(step_wall < kPerfTimeLimitSeconds,
           "one n=4096 simulation round took " + std::to_string(step_wall) + "s");
  c.expect(!kings_after(end).empty(), "two n=4096 rounds unexpectedly produced no king");
  return c;
}

// 9. Reports are byte-identical (timing stripped) across worker counts and
//    across repeated runs with the same seed, and the search repeats exactly.
Check criterion_determinism() {
  Check c;

  std::string ex1 = exhaustive_verify(3, ClaimKind::ForwardKingExists, 1).to_text(false);
  std::string ex1_json = exhaustive_verify(3, ClaimKind::ForwardKingExists, 1).to_json_string(false);
  for (unsigned w = 2; w <= 4; ++w) {
    c.expect(exhaustive_verify(3, ClaimKind::ForwardKingExists, w).to_text(false) == ex1,
             "exhaustive text report changed with workers=" + std::to_string(w));
    c.expect(exhaustive_verify(3, ClaimKind::ForwardKingExists, w).to_json_string(false) ==
                 ex1_json,
             "exhaustive json report changed with workers=" + std::to_string(w));
  }

  std::string rnd1 =
      random_verify(16, 2000, kRandomSeed, ClaimKind::SimulatorAgreement, 1).to_text(false);
  for (unsigned w = 2; w <= 4; ++w)
    c.expect(random_verify(16, 2000, kRandomSeed, ClaimKind::SimulatorAgreement, w)
                     .to_text(false) == rnd1,
             "random text report changed with workers=" + std::to_string(w));
  c.expect(random_verify(16, 2000, kRandomSeed, ClaimKind::SimulatorAgreement, 4)
                   .to_text(false) == rnd1,
           "random report changed between repeated runs");

  c.expect(search_order_sensitivity(4).to_json_string() ==
               search_order_sensitivity(4).to_json_string(),
           "order-sensitivity search is not repeatable");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Check (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "a two-round king exists (exhaustive n<=4, sampled n=5)", criterion_forward_king},
      {2, "co-kings exist and match the dual instance (exhaustive n<=4)",
       criterion_co_king_and_dual},
      {3, "blocking condition equals non-reachability (exhaustive n<=4, sampled n=32)",
       criterion_reach_blocked},
      {4, "simulator kings equal reachability kings (exhaustive n=3, sampled n=64)",
       criterion_simulator},
      {5, "constructive finders return genuine kings (exhaustive n=4, sampled n<=10 and n=64)",
       criterion_finders},
      {6, "maximum-out-degree vertices are kings of mirrored pairs (exhaustive n<=5)",
       criterion_landau},
      {7, "order-sensitivity search completes and re-validates (n=3 and n=4)",
       criterion_search},
      {8, "large instances stay under the 2-second operation budget", criterion_performance},
      {9, "reports are identical across workers and repeated runs", criterion_determinism},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.why = std::string("unhandled exception: ") + e.what();
    }
    if (result.ok) {
      std::printf("PASS: criterion %d: %s\n", criterion.id, criterion.title);
    } else {
      std::printf("FAIL: criterion %d: %s\n", criterion.id, criterion.title);
      std::fprintf(stderr, "  reason: %s\n", result.why.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  return failed;
}
