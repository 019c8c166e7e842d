#include "tourvote/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace tourvote {

namespace {

std::string pair_text(Vertex i, Vertex j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

// ---------------------------------------------------------------- Tournament

Tournament::Tournament(std::size_t n, std::vector<std::uint8_t> beats)
    : n_(n), beats_(std::move(beats)) {
  if (n_ == 0) throw InvalidTournamentError("tournament needs at least one vertex");
  if (beats_.size() != n_ * n_) {
    throw InvalidTournamentError("beats matrix has " + std::to_string(beats_.size()) +
                                 " entries, expected " + std::to_string(n_ * n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (beats_[i * n_ + i] != 0) {
      throw InvalidTournamentError("vertex " + std::to_string(i) + " beats itself");
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      const auto ij = beats_[i * n_ + j];
      const auto ji = beats_[j * n_ + i];
      if (ij > 1 || ji > 1 || ij + ji != 1) {
        throw InvalidTournamentError(
            "pair " + pair_text(static_cast<Vertex>(i), static_cast<Vertex>(j)) +
            " is not oriented exactly once");
      }
    }
  }
}

Tournament Tournament::from_order(const Ranking& order) {
  const auto pos = order.positions();
  return from_pairs(order.size(), [&](Vertex i, Vertex j) { return pos[i] < pos[j]; });
}

std::size_t Tournament::out_degree(Vertex v) const noexcept {
  const auto row = beats_.begin() + static_cast<std::ptrdiff_t>(v * n_);
  return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

std::vector<std::size_t> Tournament::out_degrees() const {
  std::vector<std::size_t> d(n_);
  for (std::size_t v = 0; v < n_; ++v) d[v] = out_degree(static_cast<Vertex>(v));
  return d;
}

// ------------------------------------------------------------------- Ranking

Ranking::Ranking(std::vector<Vertex> order) : order_(std::move(order)) {
  std::vector<char> seen(order_.size(), 0);
  for (Vertex v : order_) {
    if (v >= order_.size() || seen[v]) {
      throw MalformedProfileError("ranking is not a permutation of 0.." +
                                  std::to_string(order_.size()) + "-1");
    }
    seen[v] = 1;
  }
}

Ranking Ranking::identity(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return Ranking(std::move(v));
}

std::vector<std::size_t> Ranking::positions() const {
  std::vector<std::size_t> pos(order_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) pos[order_[k]] = k;
  return pos;
}

Ranking Ranking::reversed() const {
  return Ranking(std::vector<Vertex>(order_.rbegin(), order_.rend()));
}

bool Ranking::prefers(Vertex x, Vertex y) const {
  for (Vertex v : order_) {
    if (v == x) return true;
    if (v == y) return false;
  }
  throw std::out_of_range("vertex not in ranking");
}

// ------------------------------------------------------------------- Profile

Profile::Profile(std::size_t candidates, std::vector<Ranking> voters) : n_(candidates) {
  voters_.reserve(voters.size());
  for (auto& r : voters) append(std::move(r));
}

Profile Profile::from_rows(std::size_t candidates,
                           const std::vector<std::vector<Vertex>>& rows) {
  Profile p(candidates);
  for (const auto& row : rows) p.append(Ranking(row));
  return p;
}

void Profile::append(Ranking r) {
  if (r.size() != n_) {
    throw MalformedProfileError("ranking of length " + std::to_string(r.size()) +
                                " in a profile over " + std::to_string(n_) + " candidates");
  }
  voters_.push_back(std::move(r));
}

// -------------------------------------------------------------- MarginMatrix

MarginMatrix::MarginMatrix(std::size_t n, std::size_t voters, std::vector<int> margin)
    : n_(n), r_(voters), m_(std::move(margin)) {
  if (m_.size() != n_ * n_) throw std::invalid_argument("margin matrix size mismatch");
}

MarginMatrix margins(const Profile& p) {
  const std::size_t n = p.candidates();
  std::vector<int> m(n * n, 0);
  std::vector<std::int32_t> pos(n);
  for (const auto& voter : p.voters()) {
    for (std::size_t k = 0; k < n; ++k) pos[voter[k]] = static_cast<std::int32_t>(k);
    // Upper triangle only; branch-free so the inner loop vectorizes.
    for (std::size_t i = 0; i < n; ++i) {
      const std::int32_t pi = pos[i];
      int* row = m.data() + i * n;
      const std::int32_t* pj = pos.data();
      for (std::size_t j = i + 1; j < n; ++j) {
        row[j] += 2 * static_cast<int>(pi < pj[j]) - 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m[j * n + i] = -m[i * n + j];
  }
  return MarginMatrix(n, p.size(), std::move(m));
}

Tournament majority_pattern(const Profile& p) {
  const std::size_t n = p.candidates();
  if (p.empty()) {
    if (n >= 2) throw TieError(std::pair<Vertex, Vertex>{0, 1}, "empty profile ties every pair");
    throw TieError(std::nullopt, "empty profile generates no pattern");
  }
  const auto m = margins(p);
  std::vector<std::uint8_t> beats(n * n, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const int mij = m(i, j);
      if (mij == 0) throw TieError(std::pair{i, j}, "tie on pair " + pair_text(i, j));
      (mij > 0 ? beats[i * n + j] : beats[j * n + i]) = 1;
    }
  }
  return Tournament(n, std::move(beats));
}

// ----------------------------------------------------------------- VertexMap

VertexMap::VertexMap(std::size_t host_size, std::span<const Vertex> keep)
    : to_host_(keep.begin(), keep.end()), from_host_(host_size, kAbsent) {
  if (to_host_.empty()) throw std::invalid_argument("restriction to an empty vertex set");
  std::sort(to_host_.begin(), to_host_.end());
  for (std::size_t k = 0; k < to_host_.size(); ++k) {
    const Vertex v = to_host_[k];
    if (v >= host_size) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside 0.." +
                                  std::to_string(host_size) + "-1");
    }
    if (from_host_[v] != kAbsent) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " kept twice");
    }
    from_host_[v] = static_cast<Vertex>(k);
  }
}

std::optional<Vertex> VertexMap::to_local(Vertex host) const noexcept {
  if (host >= from_host_.size() || from_host_[host] == kAbsent) return std::nullopt;
  return from_host_[host];
}

Restricted<Ranking> restrict(const Ranking& r, std::span<const Vertex> keep) {
  VertexMap map(r.size(), keep);
  std::vector<Vertex> order;
  order.reserve(map.size());
  for (Vertex v : r) {
    if (auto local = map.to_local(v)) order.push_back(*local);
  }
  return {Ranking(std::move(order)), std::move(map)};
}

Restricted<Tournament> restrict(const Tournament& t, std::span<const Vertex> keep) {
  VertexMap map(t.size(), keep);
  auto sub = Tournament::from_pairs(
      map.size(), [&](Vertex i, Vertex j) { return t.beats(map.to_host(i), map.to_host(j)); });
  return {std::move(sub), std::move(map)};
}

Restricted<Profile> restrict(const Profile& p, std::span<const Vertex> keep) {
  VertexMap map(p.candidates(), keep);
  Profile out(map.size());
  std::vector<Vertex> order;
  for (const auto& voter : p.voters()) {
    order.clear();
    for (Vertex v : voter) {
      if (auto local = map.to_local(v)) order.push_back(*local);
    }
    out.append(Ranking(order));
  }
  return {std::move(out), std::move(map)};
}

// -------------------------------------------------------------- transitivity

TransitivityResult is_transitive(const Tournament& t) {
  const std::size_t n = t.size();
  const auto deg = t.out_degrees();
  // Transitive iff the score sequence is exactly {0, ..., n-1}.
  std::vector<Vertex> by_score(n, 0);
  std::vector<char> hit(n, 0);
  bool distinct = true;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t slot = n - 1 - deg[v];
    if (hit[slot]) {
      distinct = false;
      break;
    }
    hit[slot] = 1;
    by_score[slot] = v;
  }
  TransitivityResult res;
  if (distinct) {
    res.transitive = true;
    res.order = std::move(by_score);
    return res;
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (!t.beats(x, y)) continue;
      for (Vertex z = 0; z < n; ++z) {
        if (t.beats(y, z) && t.beats(z, x)) {
          res.cycle = std::array<Vertex, 3>{x, y, z};
          return res;
        }
      }
    }
  }
  return res;  // unreachable for a valid tournament
}

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tournament needs n >= 1");
  std::mt19937_64 gen(seed);
  return Tournament::from_pairs(n, [&](Vertex, Vertex) { return (gen() >> 63) != 0; });
}

unsigned floor_log2(std::size_t n) noexcept {
  return n == 0 ? 0u : static_cast<unsigned>(std::bit_width(n) - 1);
}

}  // namespace tourvote
