#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tourvote/construct.hpp"

namespace tourvote {

enum class Method { Fiol, McGarvey };

std::string_view method_name(Method m) noexcept;
/// Accepts "fiol" or "mcgarvey"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

/// A constructed profile failed its re-tally against the target.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRecord {
  std::size_t n = 0;
  unsigned k = 0;
  std::uint64_t seed = 0;
  Method method = Method::Fiol;
  std::size_t voters = 0;
  std::size_t bound = 0;
  std::size_t chain_len = 0;
  bool verified = false;

  bool operator==(const BenchRecord&) const = default;
};

inline constexpr std::size_t kBenchMaxN = 512;

struct BenchConfig {
  std::size_t n_min = 2;
  std::size_t n_max = 16;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::vector<Method> methods{Method::Fiol};
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
  /// Forwarded to every fiol synthesis. Must be thread-safe when threads != 1.
  StepObserver observer;
};

struct BenchSummary {
  std::size_t n = 0;
  unsigned k = 0;
  std::size_t bound = 0;
  std::size_t trials = 0;
  std::size_t max_voters = 0;  ///< fiol rows only
  std::size_t min_chain = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;  ///< ordered by (n, trial, method)
  std::vector<BenchSummary> summaries;  ///< one per n
};

/// splitmix64 finalizer; any fixed 64-bit mixer would do.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of trial `trial` at size n: master ^ mix64(n << 32 | trial).
std::uint64_t trial_seed(std::uint64_t master, std::size_t n, std::size_t trial) noexcept;

/// Runs every (n, trial, method) cell, re-tallying each profile. Throws
/// std::invalid_argument on a bad range and VerificationError if any
/// profile fails to reproduce its tournament.
BenchResult run_bench(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader = "n,k,seed,method,voters,bound,chain_len,verified";

std::string format_csv_row(const BenchRecord& r);
std::string format_csv(const std::vector<BenchRecord>& records);
std::string format_summary(const BenchSummary& s);

}  // namespace tourvote
