#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "fyperm/permutation.hpp"
#include "support.hpp"

using namespace fyperm;
using fyperm::testing::all_cycles;
using fyperm::testing::all_permutations;
using fyperm::testing::apply_then;
using fyperm::testing::RandomPerms;

namespace {

Permutation w(std::vector<Symbol> word) { return Permutation::from_word(std::move(word)); }

}  // namespace

TEST(Permutation, Identity) {
  EXPECT_EQ(to_string(Permutation::identity(1)), "1");
  EXPECT_EQ(Permutation::identity(4), w({1, 2, 3, 4}));
  EXPECT_EQ(to_compact(Permutation::identity(4)), "0123");
  EXPECT_THROW(Permutation::identity(0), std::invalid_argument);
}

TEST(Permutation, FromWordRejectsNonBijections) {
  EXPECT_THROW(w({1, 1}), std::invalid_argument);
  EXPECT_THROW(w({0, 1}), std::invalid_argument);
  EXPECT_THROW(w({1, 3}), std::invalid_argument);
  EXPECT_THROW(w({}), std::invalid_argument);
}

TEST(Permutation, ComposeActsLeftFactorFirst) {
  const auto t12 = Permutation::transposition(3, 1, 2);
  const auto t23 = Permutation::transposition(3, 2, 3);
  // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
  EXPECT_EQ(compose(t12, t23), w({3, 1, 2}));
  EXPECT_EQ(compose(t12, t23), apply_then(t12, t23));
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST(Permutation, InverseExamples) {
  EXPECT_EQ(inverse(w({3, 4, 2, 1})), w({4, 3, 1, 2}));
  EXPECT_EQ(inverse(Permutation::identity(5)), Permutation::identity(5));
}

TEST(Permutation, Transposition) {
  EXPECT_EQ(Permutation::transposition(4, 1, 2), w({2, 1, 3, 4}));
  EXPECT_EQ(Permutation::transposition(4, 3, 3), Permutation::identity(4));
  const auto t = Permutation::transposition(4, 1, 4);
  EXPECT_EQ(compose(t, t), Permutation::identity(4));
  EXPECT_THROW(Permutation::transposition(4, 0, 2), std::out_of_range);
  EXPECT_THROW(Permutation::transposition(4, 1, 5), std::out_of_range);
}

TEST(Permutation, ExtAndRest) {
  EXPECT_EQ(ext(w({2, 1})), w({2, 1, 3}));
  EXPECT_EQ(rest(w({2, 1, 3})), w({2, 1}));
  EXPECT_THROW(rest(w({3, 2, 1})), std::invalid_argument);
}

TEST(Permutation, TopPreimageAndImage) {
  EXPECT_EQ(top_preimage(w({2, 3, 1})), 2u);
  EXPECT_EQ(top_image(w({2, 3, 1})), 1u);
  EXPECT_EQ(top_preimage(Permutation::identity(6)), 6u);
  EXPECT_EQ(top_image(Permutation::identity(6)), 6u);
}

TEST(Permutation, UpExamples) {
  EXPECT_EQ(up(w({2, 1}), 1), w({3, 1, 2}));
  EXPECT_TRUE(is_full_cycle(up(w({2, 1}), 1)));
  EXPECT_EQ(up(Permutation::identity(2), 1), w({3, 2, 1}));
  EXPECT_FALSE(is_full_cycle(up(Permutation::identity(2), 1)));
  EXPECT_THROW(up(w({2, 1}), 4), std::out_of_range);
  EXPECT_THROW(up(w({2, 1}), 0), std::out_of_range);
}

TEST(Permutation, DownExamples) {
  EXPECT_EQ(down(w({3, 1, 2})), (Peeled{w({2, 1}), 1}));
  EXPECT_EQ(down(w({2, 3, 1})), (Peeled{w({2, 1}), 2}));
  EXPECT_EQ(down(Permutation::identity(5)), (Peeled{Permutation::identity(4), 5}));
  EXPECT_THROW(down(Permutation::identity(1)), std::invalid_argument);
}

TEST(Permutation, UpDownAreInverseExhaustive) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      for (Symbol q = 1; q <= n + 1; ++q) {
        const auto grown = up(p, q);
        ASSERT_EQ(top_preimage(grown), q);
        ASSERT_EQ(down(grown), (Peeled{p, q}));
      }
      if (n >= 2) {
        const auto [r, q] = down(p);
        ASSERT_EQ(up(r, q), p);
      }
    }
  }
}

TEST(Permutation, UpPreservesCyclesOnStrictRange) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& c : all_cycles(n))
      for (Symbol q = 1; q <= n; ++q) ASSERT_TRUE(is_full_cycle(up(c, q))) << to_string(c) << " q=" << q;
}

TEST(Permutation, DownCommutesWithInverse) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) ASSERT_EQ(down(inverse(p)).rest, inverse(down(p).rest));
}

TEST(Permutation, GroupLawsOnRandomTriples) {
  RandomPerms gen(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = gen.degree(1, 8);
    const auto a = gen(n), b = gen(n), c = gen(n);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    ASSERT_EQ(compose(a, Permutation::identity(n)), a);
    ASSERT_EQ(compose(Permutation::identity(n), a), a);
    ASSERT_EQ(compose(a, inverse(a)), Permutation::identity(n));
    ASSERT_EQ(inverse(inverse(a)), a);
    ASSERT_EQ(compose(a, b), apply_then(a, b));
  }
}

TEST(Permutation, SwapPositionsIsPremultiplication) {
  RandomPerms gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = gen.degree(2, 8);
    auto p = gen(n);
    const auto a = static_cast<Symbol>(gen.degree(1, n));
    const auto b = static_cast<Symbol>(gen.degree(1, n));
    const auto expected = compose(Permutation::transposition(n, a, b), p);
    p.swap_positions(a, b);
    ASSERT_EQ(p, expected);
  }
}

TEST(Permutation, Counts) {
  EXPECT_EQ(fixed_point_count(Permutation::identity(4)), 4u);
  EXPECT_EQ(inversion_count(Permutation::identity(4)), 0u);
  EXPECT_EQ(inversion_count(w({4, 3, 2, 1})), 6u);
  RandomPerms gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = gen.degree(1, 9);
    const auto p = gen(n);
    std::vector<Symbol> rev(p.word().rbegin(), p.word().rend());
    ASSERT_EQ(inversion_count(p) + inversion_count(w(rev)), n * (n - 1) / 2);
  }
}

TEST(Permutation, ClassifyCycles) {
  const auto c = classify_cycles(w({3, 1, 2}));
  EXPECT_EQ(c.kind, CycleClassification::Kind::single_cycle);
  EXPECT_EQ(c.cycle_length, 3u);
  EXPECT_EQ(classify_cycles(Permutation::identity(3)).kind, CycleClassification::Kind::identity);
  const auto g = classify_cycles(w({2, 1, 4, 3, 5}));
  EXPECT_EQ(g.kind, CycleClassification::Kind::general);
  EXPECT_EQ(g.cycle_lengths, (std::vector<std::size_t>{2, 2, 1}));
  RandomPerms gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = gen.degree(1, 10);
    const auto lengths = classify_cycles(gen(n)).cycle_lengths;
    std::size_t sum = 0;
    for (auto l : lengths) sum += l;
    ASSERT_EQ(sum, n);
  }
}

TEST(Permutation, FullCycleMatchesBruteCount) {
  // (n-1)! cycles among n! permutations
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = all_permutations(n);
    const auto cycles = std::count_if(all.begin(), all.end(), [](const Permutation& p) { return is_full_cycle(p); });
    EXPECT_EQ(static_cast<std::size_t>(cycles), all_cycles(n).size());
  }
}

TEST(Permutation, TextRoundTrip) {
  RandomPerms gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen(gen.degree(1, 10));
    ASSERT_EQ(parse_word(to_string(p)), p);
    ASSERT_EQ(parse_compact(to_compact(p)), p);
  }
  EXPECT_EQ(parse_word("2,3,1"), w({2, 3, 1}));
  EXPECT_THROW(parse_word("1 x 2"), std::invalid_argument);
  EXPECT_THROW(parse_compact("1a"), std::invalid_argument);
  EXPECT_THROW(to_compact(Permutation::identity(11)), std::invalid_argument);
}
