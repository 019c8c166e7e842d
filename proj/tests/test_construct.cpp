#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tourvote/construct.hpp"

using namespace tourvote;
using tourvote::testing::all_tournaments;
using tourvote::testing::brute_majority;
using tourvote::testing::cyclic_triangle;
using tourvote::testing::tally;
using tourvote::testing::transitive_tournament;

namespace {

constexpr Vertex a = 0, b = 1, c = 2;

// a -> b, a -> c, c -> b.
Tournament a_c_b() { return Tournament::from_order(Ranking({a, c, b})); }

// Segments straight from the set definitions A1 = {x != a : x -> b} and
// A2 = {x != b : a -> x}.
SegmentPartition partition_by_definition(const Tournament& t, Vertex pa, Vertex pb) {
  SegmentPartition s;
  s.a = pa;
  s.b = pb;
  for (Vertex x = 0; x < t.size(); ++x) {
    if (x == pa || x == pb) continue;
    const bool in_a1 = t.beats(x, pb);
    const bool in_a2 = t.beats(pa, x);
    if (in_a1 && !in_a2) s.gamma.push_back(x);
    if (in_a1 && in_a2) s.delta.push_back(x);
    if (!in_a1 && in_a2) s.sigma.push_back(x);
    if (!in_a1 && !in_a2) s.mu.push_back(x);
  }
  return s;
}

std::vector<Vertex> restrict_to(const std::vector<Vertex>& voter, std::span<const Vertex> keep) {
  std::vector<Vertex> out;
  for (Vertex v : voter) {
    if (std::find(keep.begin(), keep.end(), v) != keep.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ segment_partition

TEST(SegmentPartition, CyclicTriangleIsAllMu) {
  // A1 is empty (b beats c), A2 is empty (c beats a).
  const auto s = segment_partition(cyclic_triangle(), a, b);
  EXPECT_TRUE(s.gamma.empty());
  EXPECT_TRUE(s.delta.empty());
  EXPECT_TRUE(s.sigma.empty());
  EXPECT_EQ(s.mu, (std::vector<Vertex>{c}));
}

TEST(SegmentPartition, MiddleVertexIsDelta) {
  const auto s = segment_partition(a_c_b(), a, b);
  EXPECT_EQ(s.delta, (std::vector<Vertex>{c}));
  EXPECT_TRUE(s.gamma.empty() && s.sigma.empty() && s.mu.empty());
}

TEST(SegmentPartition, ExtremePairPutsEverythingInDelta) {
  // a beats everyone, everyone beats b.
  std::vector<Vertex> order{0};
  for (Vertex v = 2; v < 7; ++v) order.push_back(v);
  order.push_back(1);
  const auto s = segment_partition(Tournament::from_order(Ranking(order)), 0, 1);
  EXPECT_EQ(s.delta, (std::vector<Vertex>{2, 3, 4, 5, 6}));
  EXPECT_TRUE(s.gamma.empty() && s.sigma.empty() && s.mu.empty());
}

TEST(SegmentPartition, OrientationError) {
  EXPECT_THROW(segment_partition(cyclic_triangle(), b, a), OrientationError);
  EXPECT_THROW(segment_partition(cyclic_triangle(), a, a), std::invalid_argument);
  EXPECT_THROW(segment_partition(cyclic_triangle(), a, 9), std::invalid_argument);
}

TEST(SegmentPartition, MembershipConditionsOnRandomTournaments) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = random_tournament(2 + seed % 15, seed);
    const Vertex u = 0, w = 1;
    const auto [pa, pb] = t.beats(u, w) ? std::pair{u, w} : std::pair{w, u};
    const auto s = segment_partition(t, pa, pb);
    EXPECT_EQ(s, partition_by_definition(t, pa, pb));
    for (Vertex x : s.gamma) EXPECT_TRUE(t.beats(x, pb) && t.beats(x, pa));
    for (Vertex x : s.delta) EXPECT_TRUE(t.beats(x, pb) && t.beats(pa, x));
    for (Vertex x : s.sigma) EXPECT_TRUE(t.beats(pb, x) && t.beats(pa, x));
    for (Vertex x : s.mu) EXPECT_TRUE(t.beats(pb, x) && t.beats(x, pa));
    EXPECT_EQ(s.gamma.size() + s.delta.size() + s.sigma.size() + s.mu.size(), t.size() - 2);
  }
}

// ------------------------------------------------------------------ extend_pair

TEST(ExtendPair, CyclicTriangleFromSingleton) {
  const auto p = extend_pair(cyclic_triangle(), a, b, Profile::from_rows(1, {{0}}));
  EXPECT_EQ(p, Profile::from_rows(3, {{b, c, a}, {a, b, c}, {c, a, b}}));
  EXPECT_EQ(majority_pattern(p), cyclic_triangle());
  EXPECT_EQ(tally(p, a, b), 1);
  EXPECT_EQ(tally(p, b, c), 1);
  EXPECT_EQ(tally(p, c, a), 1);
}

TEST(ExtendPair, DeltaCaseFromSingleton) {
  const auto p = extend_pair(a_c_b(), a, b, Profile::from_rows(1, {{0}}));
  EXPECT_EQ(p, Profile::from_rows(3, {{b, c, a}, {a, c, b}, {a, c, b}}));
  EXPECT_GT(tally(p, a, b), 0);
  EXPECT_GT(tally(p, a, c), 0);
  EXPECT_GT(tally(p, c, b), 0);
}

TEST(ExtendPair, Errors) {
  const auto one = Profile::from_rows(1, {{0}});
  EXPECT_THROW(extend_pair(cyclic_triangle(), b, a, one), OrientationError);
  EXPECT_THROW(extend_pair(cyclic_triangle(), a, b, Profile::from_rows(1, {{0}, {0}})),
               ParityError);
  EXPECT_THROW(extend_pair(cyclic_triangle(), a, b, Profile(1)), ParityError);
  EXPECT_THROW(extend_pair(cyclic_triangle(), a, b, Profile::from_rows(2, {{0, 1}})),
               MalformedProfileError);

  // Old vertices {2, 3} with 2 -> 3, generated instead as 3 -> 2.
  const auto t = Tournament::from_order(Ranking({0, 1, 2, 3}));
  try {
    extend_pair(t, 0, 1, Profile::from_rows(2, {{1, 0}}));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.pair(), (std::pair<Vertex, Vertex>{2, 3}));
  }
}

TEST(ExtendPair, TwoVertexHostHasNoOldVertices) {
  const auto t = Tournament(2, {0, 0, 1, 0});  // 1 -> 0
  const auto p = extend_pair(t, 1, 0, Profile::from_rows(0, {{}}));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(majority_pattern(p), t);
}

TEST(ExtendPair, RandomExtensionsReproduceTheHost) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + gen() % 10;
    const auto t = random_tournament(n, gen());
    Vertex u = static_cast<Vertex>(gen() % n);
    Vertex w = static_cast<Vertex>(gen() % (n - 1));
    if (w >= u) ++w;
    const auto [pa, pb] = t.beats(u, w) ? std::pair{u, w} : std::pair{w, u};

    std::vector<Vertex> old;
    for (Vertex x = 0; x < n; ++x) {
      if (x != pa && x != pb) old.push_back(x);
    }
    // Any odd generator of the restriction works, minimal or not.
    const auto sub = restrict(t, old).value;
    const auto p_old = synthesize(sub).profile;
    ASSERT_EQ(p_old.size() % 2, 1u);

    const auto p = extend_pair(t, pa, pb, p_old);
    EXPECT_EQ(p.size(), p_old.size() + 2);
    ASSERT_EQ(brute_majority(p), t);
  }
}

// ------------------------------------------------------------------- synthesize

TEST(Synthesize, TransitiveNeedsOneVoter) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto syn = synthesize(transitive_tournament(n));
    EXPECT_EQ(syn.profile.size(), 1u);
    EXPECT_TRUE(syn.report.steps.empty());
    EXPECT_EQ(syn.profile[0], Ranking::identity(n));
  }
}

TEST(Synthesize, CyclicTriangle) {
  const auto syn = synthesize(cyclic_triangle());
  EXPECT_EQ(syn.profile.size(), 3u);
  EXPECT_EQ(syn.report.bound, 3u);
  EXPECT_EQ(syn.report.k, 1u);
  // Greedy chain [a, b]; n - 2 = 1 is odd, so the base drops to [a].
  EXPECT_EQ(syn.report.greedy_chain.vertices, (std::vector<Vertex>{a, b}));
  EXPECT_EQ(syn.report.base_chain.vertices, (std::vector<Vertex>{a}));
  EXPECT_TRUE(syn.report.base_trimmed);
  ASSERT_EQ(syn.report.steps.size(), 1u);
  // Remaining {b, c} with b -> c.
  EXPECT_EQ(syn.report.steps[0], (std::pair<Vertex, Vertex>{b, c}));
  EXPECT_EQ(majority_pattern(syn.profile), cyclic_triangle());
}

TEST(Synthesize, RandomEightMeetsBound) {
  const auto syn = synthesize(random_tournament(8, 7));
  EXPECT_EQ(voter_bound(8), 5u);
  EXPECT_LE(syn.profile.size(), 5u);
  EXPECT_EQ(syn.profile.size() % 2, 1u);
  EXPECT_EQ(majority_pattern(syn.profile), random_tournament(8, 7));
}

TEST(Synthesize, VoterBoundTable) {
  // (n, k): n - k when parities differ, n - k + 1 otherwise.
  EXPECT_EQ(voter_bound(1), 1u);   // k=0
  EXPECT_EQ(voter_bound(2), 1u);   // k=1
  EXPECT_EQ(voter_bound(3), 3u);   // k=1
  EXPECT_EQ(voter_bound(4), 3u);   // k=2
  EXPECT_EQ(voter_bound(5), 3u);   // k=2
  EXPECT_EQ(voter_bound(7), 5u);   // k=2
  EXPECT_EQ(voter_bound(8), 5u);   // k=3
  EXPECT_EQ(voter_bound(16), 13u); // k=4
  EXPECT_EQ(voter_bound(512), 503u);  // k=9
  EXPECT_EQ(voter_bound(511), 503u);  // k=8
}

TEST(Synthesize, ReportInvariants) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 60;
    const auto t = random_tournament(n, seed);
    const auto syn = synthesize(t);
    const auto& rep = syn.report;
    EXPECT_EQ(rep.final_size, syn.profile.size());
    EXPECT_EQ(rep.final_size, 1 + 2 * rep.steps.size());
    EXPECT_EQ(rep.final_size, n - rep.base_chain.size() + 1);
    EXPECT_LE(rep.final_size, rep.bound);
    EXPECT_EQ((n - rep.base_chain.size()) % 2, 0u);
    EXPECT_TRUE(is_valid_chain(t, rep.base_chain));
    EXPECT_EQ(rep.base_trimmed, rep.base_chain.size() + 1 == rep.greedy_chain.size());
    for (const auto& [pa, pb] : rep.steps) EXPECT_TRUE(t.beats(pa, pb));
    ASSERT_EQ(majority_pattern(syn.profile), t) << "seed " << seed;
  }
}

TEST(Synthesize, MarginsAreOddAndNonzero) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = random_tournament(2 + seed % 30, seed);
    const auto m = margins(synthesize(t).profile);
    for (Vertex i = 0; i < t.size(); ++i) {
      for (Vertex j = i + 1; j < t.size(); ++j) {
        EXPECT_EQ(std::abs(m(i, j)) % 2, 1);
        EXPECT_EQ(m(i, j) > 0, t.beats(i, j));
      }
    }
  }
}

TEST(Synthesize, EveryStepCancelsInternallyAndWrapsHalf) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = random_tournament(3 + seed % 40, seed);
    std::size_t last_size = 0;
    std::size_t steps = 0;
    synthesize(t, [&](const ExtensionStep& step) {
      ++steps;
      const std::size_t r = step.old_size;
      ASSERT_EQ(step.voters.size(), r + 2);
      if (last_size != 0) EXPECT_EQ(r, last_size);
      last_size = r + 2;

      std::size_t b_first = 0;
      for (std::size_t i = 0; i < r; ++i) {
        const auto& v = step.voters[i];
        const auto pos_a = std::find(v.begin(), v.end(), step.a) - v.begin();
        const auto pos_b = std::find(v.begin(), v.end(), step.b) - v.begin();
        b_first += pos_b < pos_a ? 1 : 0;
      }
      EXPECT_EQ(b_first, (r + 1) / 2);

      const std::vector<Vertex> first(step.voters[r].begin(), step.voters[r].end());
      auto second = std::vector<Vertex>(step.voters[r + 1].begin(), step.voters[r + 1].end());
      auto old_first = restrict_to(first, step.old_vertices);
      const auto old_second = restrict_to(second, step.old_vertices);
      std::reverse(old_first.begin(), old_first.end());
      EXPECT_EQ(old_first, old_second);
    });
    EXPECT_EQ(steps, synthesize(t).report.steps.size());
  }
}

TEST(Synthesize, AllSmallTournaments) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_tournaments(n)) {
      const auto syn = synthesize(t);
      EXPECT_LE(syn.profile.size(), voter_bound(n));
      EXPECT_EQ(brute_majority(syn.profile), t);
    }
  }
}

// ------------------------------------------------------------- mcgarvey_baseline

TEST(McGarvey, SingleArc) {
  const auto p = mcgarvey_baseline(Tournament(2, {0, 1, 0, 0}));
  EXPECT_EQ(p, Profile::from_rows(2, {{0, 1}, {0, 1}}));
  EXPECT_EQ(margins(p)(0, 1), 2);
}

TEST(McGarvey, CyclicTriangle) {
  const auto p = mcgarvey_baseline(cyclic_triangle());
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(brute_majority(p), cyclic_triangle());
  EXPECT_EQ(tally(p, a, b), 2);
  EXPECT_EQ(tally(p, b, c), 2);
  EXPECT_EQ(tally(p, c, a), 2);
}

TEST(McGarvey, SizeAndMarginsExactlyTwo) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const auto t = random_tournament(n, seed);
    const auto p = mcgarvey_baseline(t);
    EXPECT_EQ(p.size(), n * (n - 1));
    const auto m = margins(p);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (i != j) EXPECT_EQ(m(i, j), t.beats(i, j) ? 2 : -2);
      }
    }
  }
}

TEST(McGarvey, NeedsTwoVertices) {
  EXPECT_THROW(mcgarvey_baseline(Tournament(1, {0})), std::invalid_argument);
}
