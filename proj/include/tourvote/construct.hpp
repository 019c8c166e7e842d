#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "tourvote/core.hpp"
#include "tourvote/transitive.hpp"

namespace tourvote {

/// Classification of the old vertices by their arcs to a new pair a -> b.
///
///   gamma: x -> a, x -> b      delta: a -> x, x -> b
///   sigma: a -> x, b -> x      mu:    x -> a, b -> x
///
/// With A1 = {x != a : x -> b} and A2 = {x != b : a -> x}, gamma = A1 \ A2,
/// delta = A1 & A2, sigma = A2 \ A1 and mu is everything else. Each segment
/// lists its vertices in ascending label order.
struct SegmentPartition {
  Vertex a = 0;
  Vertex b = 0;
  std::vector<Vertex> gamma;
  std::vector<Vertex> delta;
  std::vector<Vertex> sigma;
  std::vector<Vertex> mu;

  bool operator==(const SegmentPartition&) const = default;
};

/// Partition of every vertex other than a and b. Throws OrientationError
/// unless a -> b.
SegmentPartition segment_partition(const Tournament& t_ext, Vertex a, Vertex b);

/// Partition restricted to `old_vertices` (host labels, any subset that
/// excludes a and b). Used when extending inside a larger host.
SegmentPartition segment_partition(const Tournament& host, Vertex a, Vertex b,
                                   std::span<const Vertex> old_vertices);

/// The two tail voters of an extension step:
///   gamma a delta b sigma mu   and   rev(mu) a rev(sigma) rev(delta) rev(gamma) b
std::pair<std::vector<Vertex>, std::vector<Vertex>> tail_voters(const SegmentPartition& s);

/// Adds the pair (a, b) to a generator of t_ext minus {a, b}.
///
/// `p_old` is labeled like restrict(t_ext, old vertices): local label i is
/// the i-th smallest vertex of t_ext other than a and b. It must have an odd
/// number r of voters and generate that restriction. The result, labeled
/// like t_ext, holds r + 2 voters: the first (r+1)/2 old voters wrapped as
/// b..a, the other (r-1)/2 wrapped as a..b, then the two tail voters.
///
/// Throws OrientationError unless a -> b, ParityError on even r, and
/// PreconditionError (with the first disagreeing pair, in t_ext labels)
/// when p_old does not generate the restriction.
Profile extend_pair(const Tournament& t_ext, Vertex a, Vertex b, const Profile& p_old);

struct ConstructionReport {
  TransitiveChain base_chain;  ///< seed actually used, after any parity trim
  TransitiveChain greedy_chain;  ///< chain returned by the greedy search
  bool base_trimmed = false;
  std::vector<std::pair<Vertex, Vertex>> steps;  ///< (a, b) with a -> b
  std::size_t final_size = 0;
  std::size_t bound = 0;
  unsigned k = 0;
};

/// Snapshot handed to a synthesis observer after each extension step.
/// Voter contents are in host labels over `processed` (sorted).
struct ExtensionStep {
  Vertex a;
  Vertex b;
  std::size_t old_size;  ///< r, voter count before the step
  const SegmentPartition& partition;
  std::span<const Vertex> old_vertices;
  std::span<const std::deque<Vertex>> voters;  ///< all r + 2 voters after the step
};

using StepObserver = std::function<void(const ExtensionStep&)>;

struct Synthesis {
  Profile profile;
  ConstructionReport report;
};

/// Upper bound on the voters needed for any n-vertex tournament:
/// n - k when n and k = floor(log2 n) differ in parity, n - k + 1 otherwise.
std::size_t voter_bound(std::size_t n) noexcept;

/// Builds an odd-size profile whose majority pattern is t, seeded by the
/// greedy transitive chain (trimmed by one vertex when needed so that an even
/// number of vertices remains) and extended two vertices at a time, taking
/// the remaining vertices in ascending order.
Synthesis synthesize(const Tournament& t, const StepObserver& observer = {});

/// Two voters per arc x -> y: [x, y, rest ascending] and
/// [rest descending, x, y]. Size n(n-1); every margin is exactly +-2.
Profile mcgarvey_baseline(const Tournament& t);

}  // namespace tourvote
