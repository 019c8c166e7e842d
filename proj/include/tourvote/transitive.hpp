#pragma once

#include <cstddef>
#include <vector>

#include "tourvote/core.hpp"

namespace tourvote {

/// Vertices v1..vs of a host tournament with v_i -> v_j whenever i < j.
struct TransitiveChain {
  std::vector<Vertex> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  bool operator==(const TransitiveChain&) const = default;
};

/// True iff the labels are distinct, in range, and every earlier vertex
/// beats every later one in `host`.
bool is_valid_chain(const Tournament& host, const TransitiveChain& chain);

struct GreedyTrace {
  TransitiveChain chain;
  /// working_sizes[0] = n; working_sizes[i] = working-set size after pick i.
  std::vector<std::size_t> working_sizes;
};

/// Greedy descent: pick the max out-degree vertex of the working set (lowest
/// label on ties), keep only what it beats, repeat until empty. Always yields
/// at least floor(log2 n) + 1 vertices, since the pick beats at least half of
/// the remaining working set.
GreedyTrace greedy_transitive_trace(const Tournament& t);
TransitiveChain greedy_transitive_chain(const Tournament& t);

inline constexpr std::size_t kDefaultExhaustiveCap = 16;
/// Hard limit of the bitmask search regardless of the requested cap.
inline constexpr std::size_t kMaxExhaustiveVertices = 30;

/// A longest transitive chain, the lexicographically least among those of
/// maximum length. Throws CapacityError if t.size() > n_cap.
TransitiveChain max_transitive_exhaustive(const Tournament& t,
                                          std::size_t n_cap = kDefaultExhaustiveCap);

}  // namespace tourvote
