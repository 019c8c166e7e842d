// Test-only helpers. The tallies here deliberately avoid margins() so they
// can serve as an independent check of it.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "tourvote/core.hpp"

namespace tourvote::testing {

/// 0 -> 1 -> 2 -> 0.
inline Tournament cyclic_triangle() {
  return Tournament(3, {0, 1, 0,  //
                        0, 0, 1,  //
                        1, 0, 0});
}

inline Tournament transitive_tournament(std::size_t n) {
  return Tournament::from_order(Ranking::identity(n));
}

/// (#voters with i before j) - (#voters with j before i), by direct scan.
inline int tally(const Profile& p, Vertex i, Vertex j) {
  int m = 0;
  for (const auto& voter : p.voters()) {
    for (Vertex v : voter) {
      if (v == i) {
        ++m;
        break;
      }
      if (v == j) {
        --m;
        break;
      }
    }
  }
  return m;
}

/// Majority relation by direct tally, or nullopt on any tie.
inline std::optional<Tournament> brute_majority(const Profile& p) {
  const std::size_t n = p.candidates();
  if (n == 0 || p.empty()) return std::nullopt;
  std::vector<std::uint8_t> beats(n * n, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const int m = tally(p, i, j);
      if (m == 0) return std::nullopt;
      (m > 0 ? beats[i * n + j] : beats[j * n + i]) = 1;
    }
  }
  return Tournament(n, std::move(beats));
}

/// Every labeled tournament on n vertices (2^C(n,2) of them).
inline std::vector<Tournament> all_tournaments(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Tournament> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    std::vector<std::uint8_t> beats(n * n, 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      (code >> p & 1 ? beats[i * n + j] : beats[j * n + i]) = 1;
    }
    out.emplace_back(n, std::move(beats));
  }
  return out;
}

inline std::vector<Ranking> all_rankings(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  std::vector<Ranking> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace tourvote::testing
