#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fyperm/generator.hpp"
#include "support.hpp"

using namespace fyperm;
using fyperm::testing::all_cycles;
using fyperm::testing::all_permutations;
using fyperm::testing::one_orbit;
using fyperm::testing::RecordingSource;
using fyperm::testing::ScriptedSource;

TEST(Generator, ScriptedFisherYatesMatchesWorkedExample) {
  ScriptedSource rng({4, 1, 3, 1});
  const auto g = fisher_yates(5, rng);
  EXPECT_TRUE(rng.exhausted());
  EXPECT_EQ(g.perm, Permutation::from_word({2, 5, 3, 1, 4}));
  EXPECT_EQ(g.trace.steps, (std::vector<SwapStep>{{5, 4}, {4, 1}, {3, 3}, {2, 1}, {1, 1}}));
  EXPECT_TRUE(is_valid_trace(g.trace));
  EXPECT_EQ(g.trace, trace_of(fy_encode(g.perm)));
}

TEST(Generator, DegreeOneTrace) {
  SeededSource rng(1);
  const auto g = fisher_yates(1, rng);
  EXPECT_EQ(g.perm, Permutation::identity(1));
  EXPECT_EQ(g.trace.steps, (std::vector<SwapStep>{{1, 1}}));
  EXPECT_EQ(sattolo(1, rng).perm, Permutation::identity(1));
}

TEST(Generator, InvalidTraces) {
  EXPECT_FALSE(is_valid_trace({3, {{3, 1}, {2, 3}, {1, 1}}}));
  EXPECT_FALSE(is_valid_trace({3, {{3, 1}, {2, 1}}}));
  EXPECT_FALSE(is_valid_trace({2, {{1, 1}, {2, 1}}}));
  EXPECT_TRUE(is_valid_trace({2, {{2, 1}, {1, 1}}}));
}

TEST(Generator, SeededSourceIsDeterministic) {
  SeededSource a(42), b(42), c(42, 1);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.uniform_int(1, 1000);
    ASSERT_EQ(x, b.uniform_int(1, 1000));
    differs |= x != c.uniform_int(1, 1000);
  }
  EXPECT_TRUE(differs);
  SeededSource d(7), e(7);
  EXPECT_EQ(fisher_yates(30, d).perm, fisher_yates(30, e).perm);
}

TEST(Generator, BoundedDrawsStayInRange) {
  SeededSource rng(3);
  for (std::uint64_t hi : std::vector<std::uint64_t>{1, 2, 3, 7, 1000, (1ULL << 63) + 5, UINT64_MAX}) {
    for (int i = 0; i < 2000; ++i) {
      const auto v = rng.uniform_int(1, hi);
      ASSERT_GE(v, 1u);
      ASSERT_LE(v, hi);
    }
  }
  EXPECT_EQ(rng.uniform_int(5, 5), 5u);
  EXPECT_THROW(rng.uniform_int(5, 4), std::invalid_argument);
}

TEST(Generator, SmallRangeDrawsHitEveryValue) {
  SeededSource rng(9);
  std::map<std::uint64_t, int> counts;
  for (int i = 0; i < 6000; ++i) ++counts[rng.uniform_int(1, 6)];
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [v, c] : counts) EXPECT_NEAR(c, 1000, 200) << v;
}

TEST(Generator, SattoloDegreeTwoIsTheSwap) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SeededSource rng(seed);
    EXPECT_EQ(sattolo(2, rng).perm, Permutation::from_word({2, 1}));
  }
}

TEST(Generator, SattoloAlwaysYieldsFullCycles) {
  SeededSource meta(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto n = meta.uniform_int(2, 64);
    SeededSource rng(meta.next_u64());
    const auto g = sattolo(n, rng);
    ASSERT_TRUE(one_orbit({g.perm.word().begin(), g.perm.word().end()})) << "n=" << n;
    ASSERT_TRUE(is_valid_trace(g.trace));
    ASSERT_EQ(g.trace, trace_of(fy_encode(g.perm, true)));
  }
}

TEST(Generator, FisherYatesTraceIsTheCode) {
  SeededSource rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = fisher_yates(1 + trial % 12, rng);
    ASSERT_TRUE(is_valid_trace(g.trace));
    ASSERT_EQ(g.trace, trace_of(fy_encode(g.perm)));
  }
}

TEST(Generator, GeneralMReducesToFisherYatesAndSattolo) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 10;
    RecordingSource a(seed), b(seed);
    const auto fy = fisher_yates(n, a);
    const auto g0 = general_m(n, 0, b);
    ASSERT_EQ(fy.perm, g0.perm);
    ASSERT_EQ(fy.trace, g0.trace);
    ASSERT_EQ(a.calls, b.calls);

    RecordingSource c(seed), d(seed);
    const auto sa = sattolo(n, c);
    const auto g1 = general_m(n, 1, d);
    ASSERT_EQ(sa.perm, g1.perm);
    ASSERT_EQ(sa.trace, g1.trace);
    ASSERT_EQ(c.calls, d.calls);
  }
}

TEST(Generator, GeneralMBeyondDegreeIsIdentity) {
  SeededSource rng(1);
  const auto g = general_m(3, 5, rng);
  EXPECT_EQ(g.perm, Permutation::identity(3));
  EXPECT_EQ(g.trace.steps, (std::vector<SwapStep>{{3, 3}, {2, 2}, {1, 1}}));
}

TEST(Generator, GeneralMDrawRanges) {
  RecordingSource rng(5);
  general_m(6, 2, rng);
  std::vector<std::uint64_t> his;
  for (const auto& c : rng.calls) his.push_back(c.hi);
  EXPECT_EQ(his, (std::vector<std::uint64_t>{4, 3, 2, 1}));
}

TEST(Generator, GrowReachesEveryPermutationOnce) {
  // Each growth path of length n-1 from the identity of degree 1 is a code.
  for (bool strict : {false, true}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<Permutation> layer{Permutation::identity(1)};
      for (std::size_t d = 1; d < n; ++d) {
        std::vector<Permutation> next;
        for (const auto& p : layer) {
          const std::size_t choices = strict ? d : d + 1;
          for (std::uint64_t q = 1; q <= choices; ++q) {
            ScriptedSource rng({q});
            next.push_back(grow(p, strict, rng));
          }
        }
        layer = std::move(next);
      }
      const auto expected = strict ? all_cycles(n) : all_permutations(n);
      std::set<Permutation> seen(layer.begin(), layer.end());
      ASSERT_EQ(seen.size(), layer.size());
      ASSERT_EQ(seen, std::set<Permutation>(expected.begin(), expected.end()));
    }
  }
}
