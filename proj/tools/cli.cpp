#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tourvote/bench.hpp"
#include "tourvote/construct.hpp"
#include "tourvote/io.hpp"
#include "tourvote/oracle.hpp"

namespace tourvote::cli {

namespace {

struct Options {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string method = "fiol";
  std::string input;
  std::string votes;
  std::string output;
  std::string report;
  std::string csv;
  std::size_t cap = 4;
  std::uint64_t budget = OracleOptions{}.budget;
  std::size_t n_min = 2;
  std::size_t n_max = 16;
  std::size_t trials = 10;
  std::size_t threads = 0;
};

std::string join_names(std::span<const Vertex> vs, const LabelTable& labels) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += labels.name(v);
  }
  return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
  } else {
    write_file(path, text);
  }
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n == 0) {
    err << "gen: --n must be at least 1\n";
    return kUsage;
  }
  emit(o.output, format_tournament(random_tournament(o.n, o.seed)), out);
  return kOk;
}

int cmd_synthesize(const Options& o, std::ostream& out, std::ostream& err) {
  const auto file = parse_tournament(read_file(o.input));
  const auto& t = file.tournament;
  const Method method = parse_method(o.method);
  const std::size_t n = t.size();

  std::string report = "method: " + std::string(method_name(method)) + "\n";
  report += "n: " + std::to_string(n) + "\n";
  report += "k: " + std::to_string(floor_log2(n)) + "\n";
  report += "bound: " + std::to_string(voter_bound(n)) + "\n";

  Profile profile;
  if (method == Method::Fiol) {
    auto syn = synthesize(t);
    const auto& rep = syn.report;
    profile = std::move(syn.profile);
    report += "voters: " + std::to_string(profile.size()) + "\n";
    report += "chain: " + join_names(rep.greedy_chain.vertices, file.labels) + "\n";
    report += "base: " + join_names(rep.base_chain.vertices, file.labels) + "\n";
    report += std::string("base_trimmed: ") + (rep.base_trimmed ? "true" : "false") + "\n";
    report += "steps: " + std::to_string(rep.steps.size()) + "\n";
    for (const auto& [a, b] : rep.steps) {
      report += "step: " + file.labels.name(a) + " " + file.labels.name(b) + "\n";
    }
  } else {
    if (n < 2) {
      err << "synthesize: mcgarvey needs at least two vertices\n";
      return kUsage;
    }
    profile = mcgarvey_baseline(t);
    report += "voters: " + std::to_string(profile.size()) + "\n";
  }

  if (majority_pattern(profile) != t) {
    err << "synthesize: constructed profile does not reproduce the input\n";
    return kMismatch;
  }
  report += "verified: true\n";

  const std::string votes = format_votes(profile, file.labels);
  if (o.output.empty()) {
    out << votes;
    if (!o.report.empty()) write_file(o.report, report);
  } else {
    write_file(o.output, votes);
    emit(o.report, report, out);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const auto file = parse_tournament(read_file(o.input));
  const auto& t = file.tournament;
  const auto p = parse_votes(read_file(o.votes), file.labels);
  const auto m = margins(p);

  std::size_t bad = 0;
  for (Vertex i = 0; i < t.size(); ++i) {
    for (Vertex j = i + 1; j < t.size(); ++j) {
      const auto [w, l] = t.beats(i, j) ? std::pair{i, j} : std::pair{j, i};
      const int margin = m(w, l);
      if (margin > 0) continue;
      ++bad;
      out << (margin == 0 ? "tie" : "wrong") << ": (" << file.labels.name(w) << ","
          << file.labels.name(l) << ") margin " << margin << "\n";
    }
  }
  if (bad == 0 && !p.empty()) {
    out << "ok: " << p.size() << " voters reproduce the tournament\n";
    return kOk;
  }
  if (p.empty() && bad == 0) out << "tie: empty profile\n";
  out << "mismatch: " << bad << " pair(s)\n";
  return kMismatch;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream&) {
  const auto file = parse_tournament(read_file(o.input));
  const auto& t = file.tournament;
  const auto res = min_voters_exact(t, OracleOptions{o.cap, o.budget});
  const std::size_t fiol = synthesize(t).profile.size();
  out << "min: " << res.min_voters << ", fiol: " << fiol
      << ", gap: " << (fiol - res.min_voters) << "\n";
  out << "sizes_searched:";
  for (auto r : res.sizes_searched) out << ' ' << r;
  out << "\nwitness:\n" << format_votes(res.witness, file.labels);
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  if (o.method == "all") {
    cfg.methods = {Method::Fiol, Method::McGarvey};
  } else {
    cfg.methods = {parse_method(o.method)};
  }
  const auto result = run_bench(cfg);
  std::ostream& summary = o.csv.empty() ? err : out;
  emit(o.csv, format_csv(result.records), out);
  for (const auto& s : result.summaries) summary << format_summary(s) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majority realization of tournaments by transitive voters", "tourvote"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a seeded random tournament (.tour)");
  gen->add_option("--n", o.n, "Vertex count")->required();
  gen->add_option("--seed", o.seed, "PRNG seed");
  gen->add_option("--output", o.output, "Output path (default stdout)");

  auto* syn = app.add_subcommand("synthesize", "Build a generating profile for a tournament");
  syn->add_option("--input", o.input, ".tour file")->required();
  syn->add_option("--method", o.method, "fiol or mcgarvey")
      ->check(CLI::IsMember({"fiol", "mcgarvey"}));
  syn->add_option("--output", o.output, ".votes path (default stdout)");
  syn->add_option("--report", o.report, "Report path");

  auto* ver = app.add_subcommand("verify", "Re-tally a profile against a tournament");
  ver->add_option("--input", o.input, ".tour file")->required();
  ver->add_option("--votes", o.votes, ".votes file")->required();

  auto* orc = app.add_subcommand("oracle", "Exact minimum voter count for a tiny tournament");
  orc->add_option("--input", o.input, ".tour file")->required();
  orc->add_option("--cap", o.cap, "Largest n accepted (at most 5)");
  orc->add_option("--budget", o.budget, "Search budget in margin-update steps");

  auto* bench = app.add_subcommand("bench", "Sweep random tournaments and compare to the bound");
  bench->add_option("--n-min", o.n_min, "Smallest n");
  bench->add_option("--n-max", o.n_max, "Largest n (at most 512)");
  bench->add_option("--trials", o.trials, "Trials per n");
  bench->add_option("--seed", o.seed, "Master seed");
  bench->add_option("--method", o.method, "fiol, mcgarvey or all")
      ->check(CLI::IsMember({"fiol", "mcgarvey", "all"}));
  bench->add_option("--csv", o.csv, "CSV path (default stdout)");
  bench->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out, err);
    if (*syn) return cmd_synthesize(o, out, err);
    if (*ver) return cmd_verify(o, out, err);
    if (*orc) return cmd_oracle(o, out, err);
    if (*bench) {
      if (o.trials == 0) {
        err << "bench: --trials must be at least 1\n";
        return kUsage;
      }
      return cmd_bench(o, out, err);
    }
  } catch (const CapacityError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const BudgetExceededError& e) {
    err << "refused: " << e.what() << " (last completed r=" << e.last_completed() << ")\n";
    return kRefused;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tourvote::cli
