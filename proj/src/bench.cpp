#include "tourvote/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace tourvote {

std::string_view method_name(Method m) noexcept {
  return m == Method::Fiol ? "fiol" : "mcgarvey";
}

Method parse_method(std::string_view name) {
  if (name == "fiol") return Method::Fiol;
  if (name == "mcgarvey") return Method::McGarvey;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) noexcept {
  return master ^ mix64(static_cast<std::uint64_t>(n) << 32 | static_cast<std::uint64_t>(trial));
}

namespace {

struct Cell {
  std::size_t n;
  std::size_t trial;
};

std::vector<BenchRecord> run_cell(const BenchConfig& cfg, const Cell& cell) {
  const std::uint64_t seed = trial_seed(cfg.seed, cell.n, cell.trial);
  const auto t = random_tournament(cell.n, seed);
  std::vector<BenchRecord> out;
  std::size_t chain_len = 0;
  for (Method m : cfg.methods) {
    BenchRecord rec;
    rec.n = cell.n;
    rec.k = floor_log2(cell.n);
    rec.seed = seed;
    rec.method = m;
    rec.bound = voter_bound(cell.n);
    Profile p;
    if (m == Method::Fiol) {
      auto syn = synthesize(t, cfg.observer);
      chain_len = syn.report.greedy_chain.size();
      p = std::move(syn.profile);
    } else {
      if (chain_len == 0) chain_len = greedy_transitive_chain(t).size();
      p = mcgarvey_baseline(t);
    }
    rec.chain_len = chain_len;
    rec.voters = p.size();
    rec.verified = majority_pattern(p) == t;
    if (!rec.verified) {
      throw VerificationError("method " + std::string(method_name(m)) + " failed at n=" +
                              std::to_string(cell.n) + " seed=" + std::to_string(seed));
    }
    out.push_back(rec);
  }
  return out;
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_min > cfg.n_max || cfg.n_max > kBenchMaxN) {
    throw std::invalid_argument("bench needs 2 <= n_min <= n_max <= " +
                                std::to_string(kBenchMaxN));
  }
  if (cfg.trials == 0) throw std::invalid_argument("bench needs trials >= 1");
  if (cfg.methods.empty()) throw std::invalid_argument("bench needs at least one method");

  std::vector<Cell> cells;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) cells.push_back({n, trial});
  }

  std::vector<std::vector<BenchRecord>> per_cell(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        per_cell[i] = run_cell(cfg, cells[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };

  std::size_t threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, cells.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  BenchResult result;
  for (auto& recs : per_cell) {
    for (auto& r : recs) result.records.push_back(r);
  }
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    BenchSummary s;
    s.n = n;
    s.k = floor_log2(n);
    s.bound = voter_bound(n);
    s.trials = cfg.trials;
    s.min_chain = n;
    for (const auto& r : result.records) {
      if (r.n != n) continue;
      s.min_chain = std::min(s.min_chain, r.chain_len);
      if (r.method == Method::Fiol) s.max_voters = std::max(s.max_voters, r.voters);
    }
    result.summaries.push_back(s);
  }
  return result;
}

std::string format_csv_row(const BenchRecord& r) {
  return std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.seed) + "," +
         std::string(method_name(r.method)) + "," + std::to_string(r.voters) + "," +
         std::to_string(r.bound) + "," + std::to_string(r.chain_len) + "," +
         (r.verified ? "true" : "false");
}

std::string format_csv(const std::vector<BenchRecord>& records) {
  std::string out(kBenchCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += format_csv_row(r);
    out += '\n';
  }
  return out;
}

std::string format_summary(const BenchSummary& s) {
  return "n=" + std::to_string(s.n) + " k=" + std::to_string(s.k) +
         " bound=" + std::to_string(s.bound) + " max_voters=" + std::to_string(s.max_voters) +
         " min_chain=" + std::to_string(s.min_chain) + " trials=" + std::to_string(s.trials);
}

}  // namespace tourvote
