#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tourvote/errors.hpp"

namespace tourvote {

class Ranking;

/// A strong preference pattern on vertices 0..n-1: for every pair exactly
/// one of beats(i, j), beats(j, i) holds, and no vertex beats itself.
class Tournament {
 public:
  /// `beats` is row-major n*n, nonzero at (i, j) iff i -> j.
  Tournament(std::size_t n, std::vector<std::uint8_t> beats);

  /// Builds from a predicate consulted once per pair i < j; true means i -> j.
  template <class Pred>
  static Tournament from_pairs(std::size_t n, Pred&& i_beats_j) {
    std::vector<std::uint8_t> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (i_beats_j(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
          m[i * n + j] = 1;
        } else {
          m[j * n + i] = 1;
        }
      }
    }
    return Tournament(n, std::move(m));
  }

  /// The transitive tournament whose linear order is `order`.
  static Tournament from_order(const Ranking& order);

  std::size_t size() const noexcept { return n_; }
  bool beats(Vertex i, Vertex j) const noexcept { return beats_[i * n_ + j] != 0; }
  std::size_t out_degree(Vertex v) const noexcept;
  std::vector<std::size_t> out_degrees() const;

  bool operator==(const Tournament&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> beats_;
};

/// One voter: a permutation of 0..n-1, most preferred first.
class Ranking {
 public:
  explicit Ranking(std::vector<Vertex> order);

  static Ranking identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  std::span<const Vertex> order() const noexcept { return order_; }
  Vertex operator[](std::size_t pos) const noexcept { return order_[pos]; }
  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  /// positions()[v] is the index of v in the order.
  std::vector<std::size_t> positions() const;
  Ranking reversed() const;
  bool prefers(Vertex x, Vertex y) const;

  auto operator<=>(const Ranking&) const = default;
  bool operator==(const Ranking&) const = default;

 private:
  std::vector<Vertex> order_;
};

/// An ordered multiset of rankings over a common vertex set.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::size_t candidates) : n_(candidates) {}
  Profile(std::size_t candidates, std::vector<Ranking> voters);

  /// Validates raw rows; any non-permutation or length mismatch is a
  /// MalformedProfileError.
  static Profile from_rows(std::size_t candidates,
                           const std::vector<std::vector<Vertex>>& rows);

  std::size_t candidates() const noexcept { return n_; }
  std::size_t size() const noexcept { return voters_.size(); }
  bool empty() const noexcept { return voters_.empty(); }
  const std::vector<Ranking>& voters() const noexcept { return voters_; }
  const Ranking& operator[](std::size_t i) const noexcept { return voters_[i]; }

  void append(Ranking r);

  bool operator==(const Profile&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Ranking> voters_;
};

/// margin(i, j) = #voters with i before j minus #voters with j before i.
class MarginMatrix {
 public:
  MarginMatrix(std::size_t n, std::size_t voters, std::vector<int> margin);

  std::size_t size() const noexcept { return n_; }
  std::size_t voters() const noexcept { return r_; }
  int operator()(Vertex i, Vertex j) const noexcept { return m_[i * n_ + j]; }

  bool operator==(const MarginMatrix&) const = default;

 private:
  std::size_t n_;
  std::size_t r_;
  std::vector<int> m_;
};

MarginMatrix margins(const Profile& p);

/// Pairwise-majority tournament of `p`. Throws TieError naming the first
/// tied pair (row-major, i < j). The empty profile is always rejected.
Tournament majority_pattern(const Profile& p);

/// Dense relabeling between a kept vertex subset and its host.
/// Local label i corresponds to the i-th smallest kept host vertex.
class VertexMap {
 public:
  VertexMap(std::size_t host_size, std::span<const Vertex> keep);

  std::size_t host_size() const noexcept { return from_host_.size(); }
  std::size_t size() const noexcept { return to_host_.size(); }
  Vertex to_host(Vertex local) const noexcept { return to_host_[local]; }
  std::optional<Vertex> to_local(Vertex host) const noexcept;
  const std::vector<Vertex>& kept() const noexcept { return to_host_; }

 private:
  static constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> to_host_;
  std::vector<Vertex> from_host_;
};

template <class T>
struct Restricted {
  T value;
  VertexMap map;
};

Restricted<Ranking> restrict(const Ranking& r, std::span<const Vertex> keep);
Restricted<Tournament> restrict(const Tournament& t, std::span<const Vertex> keep);
Restricted<Profile> restrict(const Profile& p, std::span<const Vertex> keep);

struct TransitivityResult {
  bool transitive = false;
  /// Linear order by descending out-degree; empty when not transitive.
  std::vector<Vertex> order;
  /// (x, y, z) with x -> y -> z -> x; lexicographically least such triple.
  std::optional<std::array<Vertex, 3>> cycle;
};

TransitivityResult is_transitive(const Tournament& t);

/// Orients each pair i < j (row-major order) with one draw from
/// std::mt19937_64 seeded with `seed`: i -> j iff the draw's top bit is set.
/// mt19937_64's output sequence is fixed by the standard, so the result is
/// identical on every conforming platform.
Tournament random_tournament(std::size_t n, std::uint64_t seed);

/// floor(log2 n) for n >= 1.
unsigned floor_log2(std::size_t n) noexcept;

}  // namespace tourvote
