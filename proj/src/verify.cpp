#include "kings/verify.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "kings/algorithms.hpp"
#include "kings/reach.hpp"
#include "kings/simulate.hpp"

namespace kings {

namespace {

struct ClaimInfo {
  ClaimKind kind;
  std::string_view name;
  bool single;
};

constexpr ClaimInfo kClaims[] = {
    {ClaimKind::ForwardKingExists, "forward-king", false},
    {ClaimKind::CoKingExists, "co-king", false},
    {ClaimKind::RainbowKingExists, "rainbow-king", false},
    {ClaimKind::ReachBlockedEquivalence, "reach-blocked-equivalence", false},
    {ClaimKind::SimulatorAgreement, "simulator-agreement", false},
    {ClaimKind::LandauSpecialCase, "landau", true},
    {ClaimKind::InductiveFinderSound, "inductive-finder", false},
    {ClaimKind::RainbowFinderSound, "rainbow-finder", false},
    {ClaimKind::DualTransformSound, "dual-transform", false},
};

const ClaimInfo& info(ClaimKind claim) {
  for (const auto& c : kClaims)
    if (c.kind == claim) return c;
  throw std::invalid_argument("unknown claim kind");
}

std::string hex(std::uint64_t v) {
  char buf[18];
  auto r = std::to_chars(buf, buf + sizeof buf, v, 16);
  return "0x" + std::string(buf, r.ptr);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::optional<VertexId> landau_offender(const Tournament& t) {
  VertexSet kings = forward_kings(t, t);
  std::uint32_t best = 0;
  for (VertexId v = 0; v < t.n(); ++v) best = std::max(best, t.out_degree(v));
  for (VertexId v = 0; v < t.n(); ++v)
    if (t.out_degree(v) == best && !kings.contains(v)) return v;
  return std::nullopt;
}

bool check_inductive_finder(const Tournament& t1, const Tournament& t2, std::string& detail) {
  const std::uint32_t n = t1.n();
  auto [king, trace] = find_king_inductive(t1, t2);
  if (!forward_kings(t1, t2).contains(king)) {
    detail = "inductive finder returned " + std::to_string(king) + ", not a forward king";
    return false;
  }
  if (!trace.steps.empty() && !trace.steps.back().reached_excluded) {
    detail = "trace did not end in a successful attempt";
    return false;
  }
  std::vector<bool> failed_before(n, false);
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& step = trace.steps[s];
    VertexSet keep = VertexSet::full(n);
    keep.erase(step.excluded);
    auto [r1, labels] = t1.restricted(keep);
    auto r2 = t2.restricted(keep).first;
    VertexId mapped = step.candidate - (step.candidate > step.excluded ? 1 : 0);
    if (!forward_kings(r1, r2).contains(mapped)) {
      detail = "trace candidate " + std::to_string(step.candidate) +
               " is not a king of the instance without " + std::to_string(step.excluded);
      return false;
    }
    if (step.reached_excluded) {
      if (s + 1 != trace.steps.size()) {
        detail = "successful attempt recorded before the end of the trace";
        return false;
      }
      if (!reaches(t1, t2, step.candidate, step.excluded)) {
        detail = "trace marks success but candidate cannot reach the excluded vertex";
        return false;
      }
    } else {
      if (!blocked(t1, t2, step.candidate, step.excluded)) {
        detail = "failed attempt (excluded " + std::to_string(step.excluded) + ", candidate " +
                 std::to_string(step.candidate) + ") does not meet the blocking condition";
        return false;
      }
      if (failed_before[step.candidate]) {
        detail = "candidate " + std::to_string(step.candidate) +
                 " recorded as failing against two exclusions";
        return false;
      }
      failed_before[step.candidate] = true;
    }
  }
  return true;
}

}  // namespace

std::string_view claim_name(ClaimKind claim) { return info(claim).name; }

std::optional<ClaimKind> claim_from_name(std::string_view name) {
  for (const auto& c : kClaims)
    if (c.name == name) return c.kind;
  return std::nullopt;
}

std::vector<ClaimKind> all_claims() {
  std::vector<ClaimKind> out;
  for (const auto& c : kClaims) out.push_back(c.kind);
  return out;
}

bool claim_uses_single_tournament(ClaimKind claim) { return info(claim).single; }

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool check_landau(const Tournament& t) { return !landau_offender(t).has_value(); }

bool check_claim_instance(ClaimKind claim, const Tournament& t1, const Tournament& t2,
                          std::string& detail) {
  switch (claim) {
    case ClaimKind::ForwardKingExists: {
      if (forward_kings(t1, t2).empty()) {
        detail = "forward king set is empty";
        return false;
      }
      KingCertificate cert = find_king_brute(t1, t2);
      if (!validate_king_certificate(t1, t2, cert)) {
        detail = "king certificate failed validation";
        return false;
      }
      return true;
    }
    case ClaimKind::CoKingExists: {
      VertexSet co = co_kings(t1, t2);
      if (co.empty()) {
        detail = "co-king set is empty";
        return false;
      }
      auto [mu, cert] = find_co_king(t1, t2);
      if (!co.contains(mu)) {
        detail = "constructed co-king " + std::to_string(mu) + " is not in the co-king set";
        return false;
      }
      if (!validate_co_king_certificate(t1, t2, cert)) {
        detail = "co-king certificate failed validation";
        return false;
      }
      return true;
    }
    case ClaimKind::RainbowKingExists: {
      if (rainbow_kings(t1, t2).empty()) {
        detail = "rainbow king set is empty";
        return false;
      }
      return true;
    }
    case ClaimKind::ReachBlockedEquivalence: {
      for (VertexId i = 0; i < t1.n(); ++i)
        for (VertexId j = 0; j < t1.n(); ++j) {
          if (i == j) continue;
          bool b = blocked(t1, t2, i, j);
          bool r = reaches(t1, t2, i, j).has_value();
          if (b == r) {
            detail = "at (" + std::to_string(i) + "," + std::to_string(j) +
                     "): blocked=" + (b ? "true" : "false") +
                     ", reachable=" + (r ? "true" : "false");
            return false;
          }
        }
      return true;
    }
    case ClaimKind::SimulatorAgreement: {
      RoundSchedule schedule = make_schedule({t1, t2});
      VertexSet sim = kings_after(run(schedule, 2));
      VertexSet fwd = forward_kings(t1, t2);
      if (!(sim == fwd)) {
        detail = "simulator kings " + set_to_string(sim) + " != reachability kings " +
                 set_to_string(fwd);
        return false;
      }
      return true;
    }
    case ClaimKind::LandauSpecialCase: {
      if (auto v = landau_offender(t1)) {
        detail = "max out-degree vertex " + std::to_string(*v) +
                 " is not a two-round king of the mirrored pair";
        return false;
      }
      return true;
    }
    case ClaimKind::InductiveFinderSound:
      return check_inductive_finder(t1, t2, detail);
    case ClaimKind::RainbowFinderSound: {
      RainbowTrace trace;
      VertexId king = find_rainbow_king(t1, t2, &trace);
      if (!rainbow_kings(t1, t2).contains(king)) {
        detail = "rainbow finder returned " + std::to_string(king) + ", not a rainbow king";
        return false;
      }
      if (trace.deletions.size() != t1.n() - 1) {
        detail = "deletion count " + std::to_string(trace.deletions.size()) + " != n-1";
        return false;
      }
      return true;
    }
    case ClaimKind::DualTransformSound: {
      auto [d1, d2] = dual_transform(t1, t2);
      VertexSet co = co_kings(t1, t2);
      VertexSet fwd = forward_kings(d1, d2);
      if (!(co == fwd)) {
        detail = "co-king set " + set_to_string(co) + " != forward kings of the dual " +
                 set_to_string(fwd);
        return false;
      }
      auto [b1, b2] = dual_transform(d1, d2);
      if (!(b1 == t1) || !(b2 == t2)) {
        detail = "double transform changed the instance";
        return false;
      }
      return true;
    }
  }
  throw std::invalid_argument("unknown claim kind");
}

namespace detail {

namespace {

struct Partial {
  std::uint64_t checked = 0;
  std::vector<FailureWitness> witnesses;
};

// Runs worker w's lambda over its contiguous chunk. Chunk w covers flat
// indices [total*w/workers, total*(w+1)/workers); exceptions propagate to the
// caller after all threads join.
template <typename Body>
void run_chunked(std::uint64_t total, unsigned workers, const Body& body) {
  if (workers == 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = total * w / workers;
    std::uint64_t hi = total * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      try {
        body(w, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

VerificationReport merge(ClaimKind claim, std::uint32_t n, VerificationReport::Mode mode,
                         std::optional<std::uint64_t> seed, std::vector<Partial> parts,
                         std::chrono::steady_clock::time_point started) {
  VerificationReport report;
  report.claim = claim;
  report.n = n;
  report.mode = mode;
  report.seed = seed;
  for (auto& p : parts) {
    report.instances_checked += p.checked;
    for (auto& w : p.witnesses) report.failure_witnesses.push_back(std::move(w));
  }
  report.failures = report.failure_witnesses.size();
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

VerificationReport drive_exhaustive(std::uint32_t n, ClaimKind claim, unsigned workers,
                                    const PairChecker& check, bool single_tournament) {
  if (n == 0) throw std::invalid_argument("vertex count must be at least 1");
  if (n > 6)
    throw std::invalid_argument("exhaustive verification is gated to n <= 6, got n=" +
                                std::to_string(n));
  if (workers == 0) throw std::invalid_argument("workers must be at least 1");
  const std::uint64_t m = std::uint64_t{1} << pair_count(n);
  const std::uint64_t total = single_tournament ? m : m * m;
  const auto started = std::chrono::steady_clock::now();
  std::vector<Partial> parts(workers);
  run_chunked(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    Partial& part = parts[w];
    std::optional<Tournament> outer;
    std::uint64_t outer_code = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const std::uint64_t c1 = single_tournament ? idx : idx / m;
      const std::uint64_t c2 = single_tournament ? 0 : idx % m;
      if (!outer || outer_code != c1) {
        outer = Tournament::from_index({n, c1});
        outer_code = c1;
      }
      std::string detail;
      bool ok;
      if (single_tournament) {
        ok = check(*outer, *outer, detail);
      } else {
        Tournament inner = Tournament::from_index({n, c2});
        ok = check(*outer, inner, detail);
      }
      if (!ok) {
        // Re-validate on freshly built instances before reporting, so a
        // harness bug cannot fabricate a counterexample.
        Tournament f1 = Tournament::from_index({n, c1});
        Tournament f2 = single_tournament ? f1 : Tournament::from_index({n, c2});
        std::string recheck_detail;
        if (check(f1, f2, recheck_detail))
          throw std::logic_error("failure witness did not re-validate: claim " +
                                 std::string(claim_name(claim)) + ", instance " + hex(c1) + " " +
                                 hex(c2));
        part.witnesses.push_back({c1, c2, std::move(detail)});
      }
      ++part.checked;
    }
  });
  return merge(claim, n, VerificationReport::Mode::Exhaustive, std::nullopt, std::move(parts),
               started);
}

VerificationReport drive_random(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                ClaimKind claim, unsigned workers, const SampleChecker& check,
                                bool single_tournament) {
  if (n == 0) throw std::invalid_argument("vertex count must be at least 1");
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (workers == 0) throw std::invalid_argument("workers must be at least 1");
  const auto started = std::chrono::steady_clock::now();
  std::vector<Partial> parts(workers);
  run_chunked(samples, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    Partial& part = parts[w];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const std::uint64_t s1 = sample_seed(seed, 2 * idx);
      const std::uint64_t s2 = sample_seed(seed, 2 * idx + 1);
      Tournament t1 = Tournament::uniform_random(n, s1);
      std::string detail;
      bool ok;
      if (single_tournament) {
        ok = check(idx, t1, t1, detail);
      } else {
        Tournament t2 = Tournament::uniform_random(n, s2);
        ok = check(idx, t1, t2, detail);
      }
      if (!ok) {
        Tournament f1 = Tournament::uniform_random(n, s1);
        Tournament f2 = single_tournament ? f1 : Tournament::uniform_random(n, s2);
        std::string recheck_detail;
        if (check(idx, f1, f2, recheck_detail))
          throw std::logic_error("failure witness did not re-validate: claim " +
                                 std::string(claim_name(claim)) + ", sample " +
                                 std::to_string(idx));
        part.witnesses.push_back(
            {s1, single_tournament ? 0 : s2,
             "sample " + std::to_string(idx) + ": " + detail});
      }
      ++part.checked;
    }
  });
  return merge(claim, n, VerificationReport::Mode::Random, seed, std::move(parts), started);
}

}  // namespace detail

VerificationReport exhaustive_verify(std::uint32_t n, ClaimKind claim, unsigned workers) {
  return detail::drive_exhaustive(
      n, claim, workers,
      [claim](const Tournament& a, const Tournament& b, std::string& d) {
        return check_claim_instance(claim, a, b, d);
      },
      claim_uses_single_tournament(claim));
}

VerificationReport random_verify(std::uint32_t n, std::uint64_t samples, std::uint64_t seed,
                                 ClaimKind claim, unsigned workers) {
  return detail::drive_random(
      n, samples, seed, claim, workers,
      [claim](std::uint64_t, const Tournament& a, const Tournament& b, std::string& d) {
        return check_claim_instance(claim, a, b, d);
      },
      claim_uses_single_tournament(claim));
}

OrderSensitivityResult search_order_sensitivity(std::uint32_t n, std::uint64_t max_instances) {
  if (n == 0) throw std::invalid_argument("vertex count must be at least 1");
  if (n > 5)
    throw std::invalid_argument("order-sensitivity search is gated to n <= 5, got n=" +
                                std::to_string(n));
  const std::uint64_t m = std::uint64_t{1} << pair_count(n);
  const std::uint64_t total = m * m;
  OrderSensitivityResult result;
  result.n = n;
  std::optional<Tournament> outer;
  std::uint64_t outer_code = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (max_instances != 0 && result.instances_scanned == max_instances) {
      result.complete = false;
      return result;
    }
    const std::uint64_t c1 = idx / m;
    const std::uint64_t c2 = idx % m;
    if (!outer || outer_code != c1) {
      outer = Tournament::from_index({n, c1});
      outer_code = c1;
    }
    Tournament inner = Tournament::from_index({n, c2});
    VertexSet diff = rainbow_kings(*outer, inner);
    diff -= forward_kings(*outer, inner);
    ++result.instances_scanned;
    if (!diff.empty()) {
      VertexId v = diff.to_vector().front();
      Tournament f1 = Tournament::from_index({n, c1});
      Tournament f2 = Tournament::from_index({n, c2});
      if (!rainbow_kings(f1, f2).contains(v) || forward_kings(f1, f2).contains(v))
        throw std::logic_error("order-sensitivity witness did not re-validate: instance " +
                               hex(c1) + " " + hex(c2));
      result.hit = OrderSensitivityResult::Hit{c1, c2, v};
      result.complete = true;
      return result;
    }
  }
  result.complete = true;
  return result;
}

std::string VerificationReport::to_text(bool include_timing) const {
  std::string out;
  out += "claim: " + std::string(claim_name(claim)) + "\n";
  out += "n: " + std::to_string(n) + "\n";
  out += std::string("mode: ") + (mode == Mode::Exhaustive ? "exhaustive" : "random") + "\n";
  if (seed) out += "seed: " + std::to_string(*seed) + "\n";
  out += "instances_checked: " + std::to_string(instances_checked) + "\n";
  out += "failures: " + std::to_string(failures) + "\n";
  for (const auto& w : failure_witnesses) {
    out += "witness: " + hex(w.code1);
    if (!claim_uses_single_tournament(claim)) out += " " + hex(w.code2);
    out += " " + w.detail + "\n";
  }
  if (include_timing) out += "wall_time_seconds: " + fixed6(wall_time_seconds) + "\n";
  return out;
}

std::string VerificationReport::to_json_string(bool include_timing) const {
  nlohmann::ordered_json j;
  j["claim"] = claim_name(claim);
  j["n"] = n;
  j["mode"] = mode == Mode::Exhaustive ? "exhaustive" : "random";
  if (seed)
    j["seed"] = *seed;
  else
    j["seed"] = nullptr;
  j["instances_checked"] = instances_checked;
  j["failures"] = failures;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& w : failure_witnesses)
    arr.push_back({{"code1", hex(w.code1)}, {"code2", hex(w.code2)}, {"detail", w.detail}});
  j["failure_witnesses"] = std::move(arr);
  if (include_timing) j["wall_time_seconds"] = wall_time_seconds;
  return j.dump();
}

std::string OrderSensitivityResult::to_text() const {
  std::string out;
  out += "target: order-sensitivity\n";
  out += "n: " + std::to_string(n) + "\n";
  out += "instances_scanned: " + std::to_string(instances_scanned) + "\n";
  out += std::string("complete: ") + (complete ? "true" : "false") + "\n";
  if (hit)
    out += "witness: " + hex(hit->code1) + " " + hex(hit->code2) + " vertex " +
           std::to_string(hit->vertex) + "\n";
  else
    out += "witness: none\n";
  return out;
}

std::string OrderSensitivityResult::to_json_string() const {
  nlohmann::ordered_json j;
  j["target"] = "order-sensitivity";
  j["n"] = n;
  j["instances_scanned"] = instances_scanned;
  j["complete"] = complete;
  if (hit)
    j["witness"] = {{"code1", hex(hit->code1)}, {"code2", hex(hit->code2)}, {"vertex", hit->vertex}};
  else
    j["witness"] = nullptr;
  return j.dump();
}

}  // namespace kings
