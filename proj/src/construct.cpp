#include "tourvote/construct.hpp"

#include <algorithm>
#include <string>

namespace tourvote {

namespace {

void check_pair(const Tournament& t, Vertex a, Vertex b) {
  if (a >= t.size() || b >= t.size()) throw std::invalid_argument("pair vertex out of range");
  if (a == b) throw std::invalid_argument("pair vertices must differ");
  if (!t.beats(a, b)) {
    throw OrientationError("expected " + std::to_string(a) + " -> " + std::to_string(b) +
                           "; swap the pair");
  }
}

void wrap_old_voters(std::vector<std::deque<Vertex>>& voters, Vertex a, Vertex b) {
  const std::size_t r = voters.size();
  const std::size_t b_first = (r + 1) / 2;
  for (std::size_t i = 0; i < r; ++i) {
    auto& v = voters[i];
    if (i < b_first) {
      v.push_front(b);
      v.push_back(a);
    } else {
      v.push_front(a);
      v.push_back(b);
    }
  }
}

void append_tails(std::vector<std::deque<Vertex>>& voters, const SegmentPartition& s) {
  auto [first, second] = tail_voters(s);
  voters.emplace_back(first.begin(), first.end());
  voters.emplace_back(second.begin(), second.end());
}

Profile to_profile(std::size_t n, const std::vector<std::deque<Vertex>>& voters) {
  Profile p(n);
  for (const auto& v : voters) p.append(Ranking(std::vector<Vertex>(v.begin(), v.end())));
  return p;
}

}  // namespace

SegmentPartition segment_partition(const Tournament& host, Vertex a, Vertex b,
                                   std::span<const Vertex> old_vertices) {
  check_pair(host, a, b);
  SegmentPartition s;
  s.a = a;
  s.b = b;
  std::vector<Vertex> sorted(old_vertices.begin(), old_vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex x : sorted) {
    if (x == a || x == b || x >= host.size()) {
      throw std::invalid_argument("old vertex " + std::to_string(x) + " is invalid");
    }
    const bool in_a1 = host.beats(x, b);
    const bool in_a2 = host.beats(a, x);
    if (in_a1 && in_a2) {
      s.delta.push_back(x);
    } else if (in_a1) {
      s.gamma.push_back(x);
    } else if (in_a2) {
      s.sigma.push_back(x);
    } else {
      s.mu.push_back(x);
    }
  }
  return s;
}

SegmentPartition segment_partition(const Tournament& t_ext, Vertex a, Vertex b) {
  check_pair(t_ext, a, b);
  std::vector<Vertex> old;
  old.reserve(t_ext.size());
  for (Vertex x = 0; x < t_ext.size(); ++x) {
    if (x != a && x != b) old.push_back(x);
  }
  return segment_partition(t_ext, a, b, old);
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> tail_voters(const SegmentPartition& s) {
  const std::size_t len = s.gamma.size() + s.delta.size() + s.sigma.size() + s.mu.size() + 2;
  std::vector<Vertex> first;
  first.reserve(len);
  first.insert(first.end(), s.gamma.begin(), s.gamma.end());
  first.push_back(s.a);
  first.insert(first.end(), s.delta.begin(), s.delta.end());
  first.push_back(s.b);
  first.insert(first.end(), s.sigma.begin(), s.sigma.end());
  first.insert(first.end(), s.mu.begin(), s.mu.end());

  std::vector<Vertex> second;
  second.reserve(len);
  second.insert(second.end(), s.mu.rbegin(), s.mu.rend());
  second.push_back(s.a);
  second.insert(second.end(), s.sigma.rbegin(), s.sigma.rend());
  second.insert(second.end(), s.delta.rbegin(), s.delta.rend());
  second.insert(second.end(), s.gamma.rbegin(), s.gamma.rend());
  second.push_back(s.b);
  return {std::move(first), std::move(second)};
}

Profile extend_pair(const Tournament& t_ext, Vertex a, Vertex b, const Profile& p_old) {
  check_pair(t_ext, a, b);
  const std::size_t n = t_ext.size();
  if (p_old.candidates() != n - 2) {
    throw MalformedProfileError("old profile covers " + std::to_string(p_old.candidates()) +
                                " vertices, expected " + std::to_string(n - 2));
  }
  if (p_old.size() % 2 == 0) {
    throw ParityError("old profile has an even voter count " + std::to_string(p_old.size()));
  }

  std::vector<Vertex> old;
  for (Vertex x = 0; x < n; ++x) {
    if (x != a && x != b) old.push_back(x);
  }

  if (!old.empty()) {
    const auto sub = restrict(t_ext, old);
    const auto m = margins(p_old);
    for (Vertex i = 0; i < old.size(); ++i) {
      for (Vertex j = i + 1; j < old.size(); ++j) {
        const int want = sub.value.beats(i, j) ? 1 : -1;
        if (m(i, j) * want <= 0) {
          throw PreconditionError(old[i], old[j],
                                  "old profile does not generate pair (" +
                                      std::to_string(old[i]) + "," + std::to_string(old[j]) +
                                      "), margin " + std::to_string(m(i, j)));
        }
      }
    }
  }

  std::vector<std::deque<Vertex>> voters;
  voters.reserve(p_old.size() + 2);
  for (const auto& r : p_old.voters()) {
    std::deque<Vertex> v;
    for (Vertex x : r) v.push_back(old[x]);
    voters.push_back(std::move(v));
  }
  wrap_old_voters(voters, a, b);
  append_tails(voters, segment_partition(t_ext, a, b, old));
  return to_profile(n, voters);
}

std::size_t voter_bound(std::size_t n) noexcept {
  const std::size_t k = floor_log2(n);
  return (n - k) % 2 == 1 ? n - k : n - k + 1;
}

Synthesis synthesize(const Tournament& t, const StepObserver& observer) {
  const std::size_t n = t.size();
  ConstructionReport report;
  report.k = floor_log2(n);
  report.bound = voter_bound(n);
  report.greedy_chain = greedy_transitive_chain(t);
  report.base_chain = report.greedy_chain;
  if ((n - report.base_chain.size()) % 2 == 1) {
    // Any prefix of a transitive chain is itself a transitive chain.
    report.base_chain.vertices.pop_back();
    report.base_trimmed = true;
  }

  std::vector<std::deque<Vertex>> voters;
  voters.emplace_back(report.base_chain.vertices.begin(), report.base_chain.vertices.end());

  std::vector<Vertex> processed = report.base_chain.vertices;
  std::sort(processed.begin(), processed.end());
  std::vector<Vertex> remaining;
  remaining.reserve(n - processed.size());
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(processed.begin(), processed.end(), v)) remaining.push_back(v);
  }

  for (std::size_t i = 0; i + 1 < remaining.size(); i += 2) {
    const Vertex u = remaining[i];
    const Vertex w = remaining[i + 1];
    const auto [a, b] = t.beats(u, w) ? std::pair{u, w} : std::pair{w, u};
    const auto partition = segment_partition(t, a, b, processed);
    const std::size_t r = voters.size();
    wrap_old_voters(voters, a, b);
    append_tails(voters, partition);
    report.steps.emplace_back(a, b);
    if (observer) {
      observer(ExtensionStep{a, b, r, partition, processed, voters});
    }
    processed.insert(std::upper_bound(processed.begin(), processed.end(), u), u);
    processed.insert(std::upper_bound(processed.begin(), processed.end(), w), w);
  }

  report.final_size = voters.size();
  return Synthesis{to_profile(n, voters), std::move(report)};
}

Profile mcgarvey_baseline(const Tournament& t) {
  const std::size_t n = t.size();
  if (n < 2) throw std::invalid_argument("McGarvey baseline needs at least two vertices");
  Profile p(n);
  std::vector<Vertex> order;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const auto [x, y] = t.beats(i, j) ? std::pair{i, j} : std::pair{j, i};
      order.assign({x, y});
      for (Vertex z = 0; z < n; ++z) {
        if (z != x && z != y) order.push_back(z);
      }
      p.append(Ranking(order));
      order.clear();
      for (Vertex z = static_cast<Vertex>(n); z-- > 0;) {
        if (z != x && z != y) order.push_back(z);
      }
      order.push_back(x);
      order.push_back(y);
      p.append(Ranking(order));
    }
  }
  return p;
}

}  // namespace tourvote
