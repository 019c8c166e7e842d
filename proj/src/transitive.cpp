#include "tourvote/transitive.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace tourvote {

bool is_valid_chain(const Tournament& host, const TransitiveChain& chain) {
  const auto& v = chain.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= host.size()) return false;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] >= host.size() || !host.beats(v[i], v[j])) return false;
    }
  }
  return true;
}

GreedyTrace greedy_transitive_trace(const Tournament& t) {
  GreedyTrace trace;
  std::vector<Vertex> working(t.size());
  for (Vertex v = 0; v < t.size(); ++v) working[v] = v;
  trace.working_sizes.push_back(working.size());

  while (!working.empty()) {
    // `working` stays sorted, so the first maximum is the lowest label.
    Vertex best = working.front();
    std::size_t best_deg = 0;
    bool first = true;
    for (Vertex u : working) {
      std::size_t deg = 0;
      for (Vertex w : working) deg += t.beats(u, w) ? 1 : 0;
      if (first || deg > best_deg) {
        best = u;
        best_deg = deg;
        first = false;
      }
    }
    trace.chain.vertices.push_back(best);
    std::erase_if(working, [&](Vertex w) { return !t.beats(best, w); });
    trace.working_sizes.push_back(working.size());
  }
  return trace;
}

TransitiveChain greedy_transitive_chain(const Tournament& t) {
  return greedy_transitive_trace(t).chain;
}

namespace {

// Next larger integer with the same popcount (Gosper's hack).
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

TransitiveChain max_transitive_exhaustive(const Tournament& t, std::size_t n_cap) {
  const std::size_t n = t.size();
  const std::size_t cap = std::min(n_cap, kMaxExhaustiveVertices);
  if (n > cap) {
    throw CapacityError(cap, "exhaustive transitive search refuses n=" + std::to_string(n) +
                                 " above cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> out(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (t.beats(i, j)) out[i] |= std::uint64_t{1} << j;
    }
  }

  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<Vertex> chain(n);
  for (std::size_t s = n; s >= 1; --s) {
    bool found = false;
    std::vector<Vertex> best;
    for (std::uint64_t mask = (std::uint64_t{1} << s) - 1; mask < limit;
         mask = next_same_popcount(mask)) {
      // A subset is transitive iff its internal scores are exactly 0..s-1;
      // the vertex with internal score d then sits at chain position s-1-d.
      std::uint64_t scores_seen = 0;
      bool ok = true;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(rest));
        const auto d = static_cast<std::size_t>(std::popcount(out[v] & mask));
        if (scores_seen >> d & 1) {
          ok = false;
          break;
        }
        scores_seen |= std::uint64_t{1} << d;
        chain[s - 1 - d] = v;
      }
      if (!ok) continue;
      std::vector<Vertex> cand(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(s));
      if (!found || cand < best) best = std::move(cand);
      found = true;
      if (s == n) break;
    }
    if (found) return TransitiveChain{std::move(best)};
  }
  return TransitiveChain{};  // unreachable: any single vertex is a chain
}

}  // namespace tourvote
