#include "tourvote/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tourvote {

namespace {

class MultisetSearch {
 public:
  MultisetSearch(const Tournament& t, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = t.size();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
    }
    do {
      perms_.push_back(perm);
      std::vector<std::size_t> pos(n);
      for (std::size_t k = 0; k < n; ++k) pos[perm[k]] = k;
      for (const auto& [i, j] : pairs_) {
        const bool voter_says_ij = pos[i] < pos[j];
        agree_.push_back(voter_says_ij == t.beats(i, j) ? 1 : -1);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  /// Index sequence of the canonically least generating multiset of size r,
  /// or empty if none exists.
  std::vector<std::size_t> search(std::size_t r, std::size_t last_completed) {
    r_ = r;
    last_completed_ = last_completed;
    chosen_.assign(r, 0);
    sums_.assign((r + 1) * pairs_.size(), 0);
    return descend(0, 0) ? chosen_ : std::vector<std::size_t>{};
  }

  const std::vector<Vertex>& permutation(std::size_t k) const { return perms_[k]; }
  std::uint64_t work() const noexcept { return work_; }

 private:
  bool descend(std::size_t depth, std::size_t start) {
    if (depth == r_) return true;
    const std::size_t np = pairs_.size();
    const int remaining = static_cast<int>(r_ - depth - 1);
    const int* cur = sums_.data() + depth * np;
    int* next = sums_.data() + (depth + 1) * np;
    for (std::size_t k = start; k < perms_.size(); ++k) {
      work_ += np;
      if (work_ > budget_) {
        throw BudgetExceededError(
            last_completed_, "oracle budget of " + std::to_string(budget_) +
                                 " steps exhausted while searching r=" + std::to_string(r_));
      }
      const int* contrib = agree_.data() + k * np;
      bool viable = true;
      for (std::size_t p = 0; p < np; ++p) {
        next[p] = cur[p] + contrib[p];
        // Needs next[p] + (future contributions) >= 1, each at most +1.
        if (next[p] + remaining < 1) viable = false;
      }
      if (!viable) continue;
      chosen_[depth] = k;
      if (descend(depth + 1, k)) return true;
    }
    return false;
  }

  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::size_t r_ = 0;
  std::size_t last_completed_ = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::vector<Vertex>> perms_;
  std::vector<int> agree_;  // perms x pairs, +1 where the voter agrees with t
  std::vector<std::size_t> chosen_;
  std::vector<int> sums_;  // (depth + 1) x pairs running agreement totals
};

}  // namespace

OracleResult min_voters_exact(const Tournament& t, const OracleOptions& opts) {
  const std::size_t cap = std::min(opts.n_cap, kOracleHardCap);
  if (t.size() > cap) {
    throw CapacityError(cap, "oracle refuses n=" + std::to_string(t.size()) + " above cap " +
                                 std::to_string(cap));
  }
  MultisetSearch search(t, opts.budget);
  OracleResult res;
  std::size_t last_completed = 0;
  for (std::size_t r = 1;; r += 2) {
    res.sizes_searched.push_back(r);
    const auto picks = search.search(r, last_completed);
    if (!picks.empty()) {
      res.min_voters = r;
      res.witness = Profile(t.size());
      for (std::size_t k : picks) res.witness.append(Ranking(search.permutation(k)));
      res.work = search.work();
      return res;
    }
    last_completed = r;
  }
}

Tournament tournament_from_code(std::size_t n, std::uint64_t code) {
  std::size_t bit = 0;
  return Tournament::from_pairs(n, [&](Vertex, Vertex) { return (code >> bit++ & 1) != 0; });
}

MaxVResult max_v_exact(std::size_t n, const OracleOptions& opts) {
  constexpr std::size_t kCap = 4;
  if (n > kCap) {
    throw CapacityError(kCap, "max_v_exact refuses n=" + std::to_string(n) + " above cap 4");
  }
  if (n == 0) throw std::invalid_argument("max_v_exact needs n >= 1");
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  std::size_t best = 0;
  std::uint64_t best_code = 0;
  for (std::uint64_t code = 0; code < count; ++code) {
    const auto res = min_voters_exact(tournament_from_code(n, code), opts);
    if (res.min_voters > best) {
      best = res.min_voters;
      best_code = code;
    }
  }
  return MaxVResult{best, tournament_from_code(n, best_code)};
}

}  // namespace tourvote
