#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kings/tournament.hpp"

namespace kings {

/// Checkable claims. Most are properties of an ordered pair of tournaments;
/// LandauSpecialCase ranges over single tournaments.
enum class ClaimKind {
  ForwardKingExists,
  CoKingExists,
  RainbowKingExists,
  ReachBlockedEquivalence,
  SimulatorAgreement,
  LandauSpecialCase,
  InductiveFinderSound,
  RainbowFinderSound,
  DualTransformSound,
};

/// Stable kebab-case name used by the CLI and in reports
/// (e.g. "forward-king", "landau", "reach-blocked-equivalence").
std::string_view claim_name(ClaimKind claim);
std::optional<ClaimKind> claim_from_name(std::string_view name);
std::vector<ClaimKind> all_claims();
bool claim_uses_single_tournament(ClaimKind claim);

/// One failing instance. In exhaustive mode code1/code2 are instance codes
/// (code2 unused for single-tournament claims); in random mode they are the
/// per-sample generator seeds that reproduce the instances at the report's n.
struct FailureWitness {
  std::uint64_t code1 = 0;
  std::uint64_t code2 = 0;
  std::string detail;
  bool operator==(const FailureWitness&) const = default;
};

struct VerificationReport {
  enum class Mode { Exhaustive, Random };

  ClaimKind claim = ClaimKind::ForwardKingExists;
  std::uint32_t n = 0;
  Mode mode = Mode::Exhaustive;
  std::uint64_t instances_checked = 0;
  std::uint64_t failures = 0;  ///< always equals failure_witnesses.size()
  std::vector<FailureWitness> failure_witnesses;
  std::optional<std::uint64_t> seed;  ///< present in random mode
  double wall_time_seconds = 0.0;     ///< excluded from determinism guarantees

  bool passed() const { return failures == 0; }

  /// One key:value per line; witness codes in hex; the timing line comes last
  /// so deterministic comparisons can strip it (or pass include_timing=false).
  std::string to_text(bool include_timing = true) const;
  std::string to_json_string(bool include_timing = true) const;
};

/// Checks `claim` on every instance at vertex count n, in ascending
/// instance-code order (outer code first for pair claims). Gated to n <= 6.
/// Work splits into contiguous chunks across `workers` threads; the report is
/// identical for any worker count.
VerificationReport exhaustive_verify(std::uint32_t n, ClaimKind claim, unsigned workers = 1);

/// Checks `claim` on `samples` seeded random instances at vertex count n.
/// Each sample derives its own generator seeds from (seed, sample index), so
/// the report does not depend on the worker partitioning.
VerificationReport random_verify(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                 ClaimKind claim, unsigned workers = 1);

/// Result of scanning for a vertex that is a rainbow king but not a forward
/// king. `complete` is true when the outcome is conclusive: a witness was
/// found, or every instance pair at this n was scanned.
struct OrderSensitivityResult {
  struct Hit {
    std::uint64_t code1 = 0;
    std::uint64_t code2 = 0;
    VertexId vertex = 0;
    bool operator==(const Hit&) const = default;
  };

  std::uint32_t n = 0;
  std::uint64_t instances_scanned = 0;
  bool complete = false;
  std::optional<Hit> hit;

  std::string to_text() const;
  std::string to_json_string() const;
};

/// Scans instance pairs in ascending code order and returns the first vertex
/// found in rainbow_kings minus forward_kings, re-validated before being
/// reported. Gated to n <= 5. max_instances = 0 scans the whole space;
/// otherwise the scan stops (inconclusive) after that many pairs.
OrderSensitivityResult search_order_sensitivity(std::uint32_t n, std::uint64_t max_instances = 0);

/// True iff every maximum-out-degree vertex of t is a forward king of (t, t).
bool check_landau(const Tournament& t);

/// Deterministic per-sample seed stream: sample_seed(s, k) is the k-th output
/// of a splitmix64 generator seeded with s.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Checks one claim instance directly; detail receives a description on
/// failure. Pair claims ignore nothing; LandauSpecialCase ignores t2.
bool check_claim_instance(ClaimKind claim, const Tournament& t1, const Tournament& t2,
                          std::string& detail);

namespace detail {

/// Harness internals exposed so tests can drive them with synthetic checkers
/// (the real claims never fail, which would leave the failure path untested).
using PairChecker = std::function<bool(const Tournament&, const Tournament&, std::string&)>;
using SampleChecker =
    std::function<bool(std::uint64_t index, const Tournament&, const Tournament&, std::string&)>;

VerificationReport drive_exhaustive(std::uint32_t n, ClaimKind claim, unsigned workers,
                                    const PairChecker& check, bool single_tournament);
VerificationReport drive_random(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                ClaimKind claim, unsigned workers, const SampleChecker& check,
                                bool single_tournament);

}  // namespace detail

}  // namespace kings
