#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "kings/algorithms.hpp"
#include "kings/reach.hpp"
#include "kings/simulate.hpp"
#include "kings/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;     // usage or I/O problems
constexpr int kExitFinding = 2;   // verification failure or search witness

kings::Tournament load_tournament(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return kings::parse_tournament(in);
}

std::pair<kings::Tournament, kings::Tournament> load_pair(const std::string& p1,
                                                          const std::string& p2) {
  kings::Tournament t1 = load_tournament(p1);
  kings::Tournament t2 = load_tournament(p2);
  if (t1.n() != t2.n())
    throw std::runtime_error("size mismatch between " + p1 + " (n=" + std::to_string(t1.n()) +
                             ") and " + p2 + " (n=" + std::to_string(t2.n()) + ")");
  return {std::move(t1), std::move(t2)};
}

std::string witness_text(kings::VertexId from, kings::VertexId to, const kings::ReachWitness& w) {
  using Kind = kings::ReachWitness::Kind;
  std::string f = std::to_string(from);
  std::string t = std::to_string(to);
  switch (w.kind) {
    case Kind::Same:
      return f + " is " + t;
    case Kind::Edge1:
      return f + " -> " + t + " (round-1 edge)";
    case Kind::Edge2:
      return f + " -> " + t + " (round-2 edge)";
    case Kind::TwoStep:
      return f + " -> " + std::to_string(w.via) + " -> " + t + " (round-1 then round-2)";
  }
  return {};
}

ordered_json witness_json(kings::VertexId to, const kings::ReachWitness& w) {
  using Kind = kings::ReachWitness::Kind;
  ordered_json j;
  j["target"] = to;
  switch (w.kind) {
    case Kind::Same:
      j["kind"] = "same";
      break;
    case Kind::Edge1:
      j["kind"] = "round-1-edge";
      break;
    case Kind::Edge2:
      j["kind"] = "round-2-edge";
      break;
    case Kind::TwoStep:
      j["kind"] = "two-step";
      j["via"] = w.via;
      break;
  }
  return j;
}

std::string rainbow_witness_text(kings::VertexId from, kings::VertexId to,
                                 const kings::RainbowWitness& w) {
  using Kind = kings::RainbowWitness::Kind;
  std::string f = std::to_string(from);
  std::string t = std::to_string(to);
  switch (w.kind) {
    case Kind::Same:
      return f + " is " + t;
    case Kind::RedEdge:
      return f + " -> " + t + " (red edge)";
    case Kind::BlueEdge:
      return f + " -> " + t + " (blue edge)";
    case Kind::RedBlue:
      return f + " -> " + std::to_string(w.via) + " -> " + t + " (red then blue)";
    case Kind::BlueRed:
      return f + " -> " + std::to_string(w.via) + " -> " + t + " (blue then red)";
  }
  return {};
}

ordered_json rainbow_witness_json(kings::VertexId to, const kings::RainbowWitness& w) {
  using Kind = kings::RainbowWitness::Kind;
  ordered_json j;
  j["target"] = to;
  switch (w.kind) {
    case Kind::Same:
      j["kind"] = "same";
      break;
    case Kind::RedEdge:
      j["kind"] = "red-edge";
      break;
    case Kind::BlueEdge:
      j["kind"] = "blue-edge";
      break;
    case Kind::RedBlue:
      j["kind"] = "red-blue";
      j["via"] = w.via;
      break;
    case Kind::BlueRed:
      j["kind"] = "blue-red";
      j["via"] = w.via;
      break;
  }
  return j;
}

struct GenArgs {
  std::uint32_t n = 0;
  std::string model;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_gen(const GenArgs& a) {
  std::optional<kings::Tournament> t;
  if (a.model == "uniform") {
    if (!a.seed) throw std::runtime_error("--model uniform requires an explicit --seed");
    t = kings::Tournament::uniform_random(a.n, *a.seed);
  } else if (a.model == "transitive") {
    if (a.seed) throw std::runtime_error("--seed only applies to --model uniform");
    t = kings::Tournament::transitive(a.n);
  } else if (a.model == "rotational") {
    if (a.seed) throw std::runtime_error("--seed only applies to --model uniform");
    t = kings::Tournament::rotational(a.n);
  } else {
    throw std::runtime_error("unknown model '" + a.model +
                             "' (expected uniform, transitive, or rotational)");
  }
  std::string text = kings::serialize(*t);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << text;
  }
  return kExitOk;
}

struct FindKingArgs {
  std::string t1, t2;
  std::string algo = "brute";
  bool certificate = false;
  bool json = false;
};

int run_find_king(const FindKingArgs& a) {
  auto [t1, t2] = load_pair(a.t1, a.t2);
  kings::VertexId king = 0;
  if (a.algo == "brute") {
    king = kings::find_king_brute(t1, t2).king;
  } else if (a.algo == "inductive") {
    if (t1.n() > 12)
      throw std::runtime_error("the inductive finder is limited to n <= 12 (got n=" +
                               std::to_string(t1.n()) + "); use --algo brute");
    king = kings::find_king_inductive(t1, t2).first;
  } else if (a.algo == "rainbow") {
    std::cerr << "warning: the rainbow finder guarantees only mixed-color two-step coverage; "
                 "its output may not be a two-round king\n";
    king = kings::find_rainbow_king(t1, t2);
  } else {
    throw std::runtime_error("unknown algorithm '" + a.algo +
                             "' (expected brute, inductive, or rainbow)");
  }

  if (a.json) {
    ordered_json j;
    j["king"] = king;
    j["algorithm"] = a.algo;
    if (a.certificate) {
      auto arr = ordered_json::array();
      for (kings::VertexId v = 0; v < t1.n(); ++v) {
        if (v == king) continue;
        if (a.algo == "rainbow") {
          auto w = kings::rainbow_reaches(t1, t2, king, v);
          if (w) arr.push_back(rainbow_witness_json(v, *w));
        } else {
          auto w = kings::reaches(t1, t2, king, v);
          if (w) arr.push_back(witness_json(v, *w));
        }
      }
      j["certificate"] = std::move(arr);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "king: " << king << "\n";
    if (a.certificate) {
      for (kings::VertexId v = 0; v < t1.n(); ++v) {
        if (v == king) continue;
        if (a.algo == "rainbow") {
          auto w = kings::rainbow_reaches(t1, t2, king, v);
          if (w) std::cout << "witness: " << rainbow_witness_text(king, v, *w) << "\n";
        } else {
          auto w = kings::reaches(t1, t2, king, v);
          if (w) std::cout << "witness: " << witness_text(king, v, *w) << "\n";
        }
      }
    }
  }
  return kExitOk;
}

struct FindCoKingArgs {
  std::string t1, t2;
  bool certificate = false;
  bool json = false;
};

int run_find_co_king(const FindCoKingArgs& a) {
  auto [t1, t2] = load_pair(a.t1, a.t2);
  auto [mu, cert] = kings::find_co_king(t1, t2);
  if (a.json) {
    ordered_json j;
    j["co_king"] = mu;
    if (a.certificate) {
      auto arr = ordered_json::array();
      for (kings::VertexId v = 0; v < t1.n(); ++v) {
        if (v == mu) continue;
        ordered_json w = witness_json(mu, cert.witnesses[v]);
        w["source"] = v;
        w.erase("target");
        arr.push_back(std::move(w));
      }
      j["certificate"] = std::move(arr);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "co-king: " << mu << "\n";
    if (a.certificate) {
      for (kings::VertexId v = 0; v < t1.n(); ++v) {
        if (v == mu) continue;
        std::cout << "witness: " << witness_text(v, mu, cert.witnesses[v]) << "\n";
      }
    }
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string schedule;
  std::uint32_t rounds = 0;
  bool json = false;
};

int run_simulate(const SimulateArgs& a) {
  std::ifstream in(a.schedule);
  if (!in) throw std::runtime_error("cannot open " + a.schedule);
  kings::RoundSchedule schedule = kings::parse_schedule(in);
  kings::KnowledgeState state = kings::run(schedule, a.rounds);
  kings::VertexSet kings_now = kings_after(state);
  if (a.json) {
    ordered_json j;
    j["n"] = state.n;
    j["rounds"] = a.rounds;
    auto holders = ordered_json::array();
    for (kings::VertexId i = 0; i < state.n; ++i) holders.push_back(state.holders[i].to_vector());
    j["holders"] = std::move(holders);
    j["kings"] = kings_now.to_vector();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n: " << state.n << "\n";
    std::cout << "rounds: " << a.rounds << "\n";
    std::cout << "knowledge:\n";
    for (kings::VertexId i = 0; i < state.n; ++i) {
      std::string row(state.n, '0');
      for (kings::VertexId j = 0; j < state.n; ++j)
        if (state.holders[i].contains(j)) row[j] = '1';
      std::cout << row << "\n";
    }
    std::cout << "kings:";
    for (kings::VertexId v : kings_now.to_vector()) std::cout << " " << v;
    std::cout << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string claim;
  std::uint32_t n = 0;
  std::string mode;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  bool allow_long_run = false;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  auto claim = kings::claim_from_name(a.claim);
  if (!claim) {
    std::string names;
    for (kings::ClaimKind c : kings::all_claims()) {
      if (!names.empty()) names += ", ";
      names += kings::claim_name(c);
    }
    throw std::runtime_error("unknown claim '" + a.claim + "' (expected one of: " + names + ")");
  }
  kings::VerificationReport report;
  if (a.mode == "exhaustive") {
    if (a.samples || a.seed)
      throw std::runtime_error("--samples/--seed only apply to --mode random");
    const std::uint32_t gate = a.allow_long_run ? 6 : 5;
    if (a.n > gate)
      throw std::runtime_error(
          "exhaustive mode is limited to n <= " + std::to_string(gate) +
          (a.allow_long_run ? "" : " (pass --allow-long-run for n=6)"));
    report = kings::exhaustive_verify(a.n, *claim, a.workers);
  } else if (a.mode == "random") {
    if (!a.samples || !a.seed)
      throw std::runtime_error("--mode random requires both --samples and --seed");
    report = kings::random_verify(a.n, *a.samples, *a.seed, *claim, a.workers);
  } else {
    throw std::runtime_error("unknown mode '" + a.mode + "' (expected exhaustive or random)");
  }
  std::cout << (a.json ? report.to_json_string() + "\n" : report.to_text());
  return report.passed() ? kExitOk : kExitFinding;
}

struct SearchArgs {
  std::string target;
  std::uint32_t n = 0;
  bool json = false;
};

int run_search(const SearchArgs& a) {
  if (a.target != "order-sensitivity")
    throw std::runtime_error("unknown search target '" + a.target +
                             "' (expected order-sensitivity)");
  if (a.n > 5)
    throw std::runtime_error("search is limited to n <= 5 (got n=" + std::to_string(a.n) + ")");
  kings::OrderSensitivityResult result = kings::search_order_sensitivity(a.n);
  std::cout << (a.json ? result.to_json_string() + "\n" : result.to_text());
  return result.hit ? kExitFinding : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-round tournament kings: generators, finders, simulator, and verifier"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a tournament and print or save it");
  gen->add_option("--n", gen_args.n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--model", gen_args.model, "uniform, transitive, or rotational")->required();
  gen->add_option("--seed", gen_args.seed, "generator seed (uniform model only)");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  FindKingArgs fk_args;
  auto* fk = app.add_subcommand("find-king", "Find a vertex that reaches every vertex in two rounds");
  fk->add_option("--t1", fk_args.t1, "round-1 tournament file")->required();
  fk->add_option("--t2", fk_args.t2, "round-2 tournament file")->required();
  fk->add_option("--algo", fk_args.algo, "brute (default), inductive, or rainbow");
  fk->add_flag("--certificate", fk_args.certificate, "print per-target reachability witnesses");
  fk->add_flag("--json", fk_args.json, "machine-readable output");

  FindCoKingArgs fck_args;
  auto* fck = app.add_subcommand("find-co-king", "Find a vertex that every vertex reaches in two rounds");
  fck->add_option("--t1", fck_args.t1, "round-1 tournament file")->required();
  fck->add_option("--t2", fck_args.t2, "round-2 tournament file")->required();
  fck->add_flag("--certificate", fck_args.certificate, "print per-source reachability witnesses");
  fck->add_flag("--json", fck_args.json, "machine-readable output");

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Run synchronous dissemination over a schedule");
  sim->add_option("--schedule", sim_args.schedule, "schedule file")->required();
  sim->add_option("--rounds", sim_args.rounds, "rounds to simulate")->required();
  sim->add_flag("--json", sim_args.json, "machine-readable output");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Check a claim exhaustively or on seeded random instances");
  ver->add_option("--claim", ver_args.claim, "claim name (see docs)")->required();
  ver->add_option("--n", ver_args.n, "vertex count")->required()->check(CLI::PositiveNumber);
  ver->add_option("--mode", ver_args.mode, "exhaustive or random")->required();
  ver->add_option("--samples", ver_args.samples, "sample count (random mode)");
  ver->add_option("--seed", ver_args.seed, "base seed (random mode)");
  ver->add_option("--workers", ver_args.workers, "worker thread count (default 1)")
      ->check(CLI::PositiveNumber);
  ver->add_flag("--allow-long-run", ver_args.allow_long_run,
                "permit the n=6 exhaustive sweep (about 10^9 instance pairs)");
  ver->add_flag("--json", ver_args.json, "machine-readable output");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Scan small instances for distinguishing examples");
  search->add_option("--target", search_args.target, "search target: order-sensitivity")
      ->required();
  search->add_option("--n", search_args.n, "vertex count")->required()->check(CLI::PositiveNumber);
  search->add_flag("--json", search_args.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (fk->parsed()) return run_find_king(fk_args);
    if (fck->parsed()) return run_find_co_king(fck_args);
    if (sim->parsed()) return run_simulate(sim_args);
    if (ver->parsed()) return run_verify(ver_args);
    if (search->parsed()) return run_search(search_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
