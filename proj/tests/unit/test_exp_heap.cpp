#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "partheap/audit.hpp"
#include "partheap/errors.hpp"
#include "partheap/exp_heap.hpp"

using namespace partheap;

namespace {

std::vector<UserKey> keys_in(const ExpHeap& h, std::size_t level) {
  std::vector<UserKey> out;
  for (const Node& n : h.level(level)) out.push_back(n.key.user);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UserKey> range(UserKey from, std::size_t count) {
  std::vector<UserKey> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = from + static_cast<UserKey>(i);
  return out;
}

// Potential parts evaluated straight from the set sizes.
Potential reference_potential(const std::vector<std::size_t>& sizes) {
  Potential p;
  std::int64_t prefix = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const auto s = static_cast<std::int64_t>(sizes[k]);
    const std::int64_t half = std::int64_t{1} << k;  // 2^(i-1) with i = k + 1
    prefix += s;
    p.parts[0] += std::max<std::int64_t>(0, s - 5 * half);
    p.parts[1] += s / (2 * half);
    p.parts[2] += std::max<std::int64_t>(0, half - prefix);
  }
  return p;
}

}  // namespace

TEST(ExpInsert, SixthInsertPushesFirstSet) {
  ExpHeap h;
  for (UserKey k : {8, 3, 5, 9, 4, 7}) h.insert(k);
  ASSERT_EQ(h.level_count(), 2u);
  EXPECT_TRUE(h.level(1).empty());
  EXPECT_EQ(keys_in(h, 2), (std::vector<UserKey>{3, 4, 5, 7, 8, 9}));
  EXPECT_EQ(h.pivot(2).user, 3);
  EXPECT_TRUE(audit(h).ok()) << audit(h).summary();
}

TEST(ExpInsert, BelowSecondPivotLandsInFirstSet) {
  ExpHeap h = ExpHeap::from_sets({{1}, {10, 11, 12}});
  h.insert(5);
  EXPECT_EQ(keys_in(h, 1), (std::vector<UserKey>{1, 5}));
}

TEST(ExpInsert, OneBelowCapacityDoesNotPush) {
  ExpHeap h;
  for (UserKey k = 0; k < 5; ++k) h.insert(k);
  EXPECT_EQ(h.level_count(), 1u);
  EXPECT_EQ(h.level(1).size(), static_cast<std::size_t>(ExpHeap::capacity(1) - 1));
}

TEST(ExpPush, ConcatenatesIntoSmallSet) {
  ExpHeap h = ExpHeap::from_sets({range(0, 6), range(100, 3)});
  h.push(1);
  EXPECT_TRUE(h.level(1).empty());
  EXPECT_EQ(h.level(2).size(), 9u);
  EXPECT_LT(9, ExpHeap::capacity(2));
  EXPECT_EQ(h.pivot(2).user, 0);
  EXPECT_EQ(h.level_count(), 2u);
}

TEST(ExpPush, DisplacesLargeSetOneLevelDown) {
  ExpHeap h = ExpHeap::from_sets({range(0, 6), range(100, 7)});
  h.push(1);
  ASSERT_EQ(h.level_count(), 3u);
  EXPECT_EQ(keys_in(h, 2), range(0, 6));
  EXPECT_EQ(keys_in(h, 3), range(100, 7));
  EXPECT_LE(4, 7);
  EXPECT_LE(7, 12);
  EXPECT_EQ(h.pivot(3).user, 100);
  EXPECT_TRUE(audit(h).ok()) << audit(h).summary();
}

TEST(ExpPush, RejectsSetOutsideSizeWindow) {
  ExpHeap h = ExpHeap::from_sets({range(0, 1), range(100, 3)});
  EXPECT_THROW(h.push(2), HeapError);
}

TEST(ExpDeleteMin, FromFirstSet) {
  ExpHeap h = ExpHeap::from_sets({{4, 2, 7}});
  EXPECT_EQ(h.delete_min(), 2);
}

TEST(ExpDeleteMin, PullsWhenFirstSetIsEmpty) {
  ExpHeap h = ExpHeap::from_sets({{}, {4, 7, 2, 9}});
  EXPECT_EQ(h.delete_min(), 2);
  EXPECT_EQ(keys_in(h, 2), (std::vector<UserKey>{4, 7, 9}));
  EXPECT_EQ(h.pivot(2).user, 4);
}

TEST(ExpDeleteMin, TrimsTrailingLevels) {
  ExpHeap h = ExpHeap::from_sets({{1, 2}, {}, {}, {10}});
  EXPECT_EQ(h.level_count(), 4u);
  EXPECT_EQ(h.delete_min(), 1);
  EXPECT_EQ(h.level_count(), 3u);
  EXPECT_EQ(keys_in(h, 3), (std::vector<UserKey>{10}));
  EXPECT_EQ(h.delete_min(), 2);
  EXPECT_EQ(h.delete_min(), 10);
  EXPECT_TRUE(h.empty());
}

TEST(ExpDeleteMin, DrainsInSortedOrder) {
  std::mt19937_64 rng(21);
  for (SelectMode mode : {SelectMode::Deterministic, SelectMode::Randomized}) {
    ExpHeap h(mode, 9);
    std::vector<UserKey> in(4000);
    for (auto& x : in) {
      x = std::uniform_int_distribution<UserKey>(0, 999)(rng);
      h.insert(x);
    }
    std::vector<UserKey> out;
    while (!h.empty()) {
      out.push_back(h.delete_min());
      ASSERT_TRUE(audit(h).ok()) << audit(h).summary();
    }
    std::sort(in.begin(), in.end());
    EXPECT_EQ(out, in);
  }
}

TEST(ExpPull, SwapBranch) {
  ExpHeap h = ExpHeap::from_sets({{}, {5}, {9, 10}});
  h.pull(1);
  EXPECT_EQ(keys_in(h, 1), (std::vector<UserKey>{5}));
  EXPECT_TRUE(h.level(2).empty());
  EXPECT_EQ(h.pivot(2), h.pivot(3));
}

TEST(ExpPull, SelectsSmallestIntoFirstSet) {
  const std::vector<UserKey> s2 = {4, 7, 2, 9};
  ExpHeap h = ExpHeap::from_sets({{}, s2});
  h.pull(1);
  std::vector<UserKey> sorted = s2;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(keys_in(h, 1), (std::vector<UserKey>{sorted[0]}));
  EXPECT_EQ(keys_in(h, 2), (std::vector<UserKey>(sorted.begin() + 1, sorted.end())));
  EXPECT_EQ(h.pivot(2).user, sorted[1]);
}

TEST(ExpPull, RecursesThroughEmptyLevels) {
  ExpHeap h = ExpHeap::from_sets({{}, {}, range(10, 5)});
  h.pull(1);
  EXPECT_EQ(keys_in(h, 1), (std::vector<UserKey>{10}));
  EXPECT_EQ(keys_in(h, 2), (std::vector<UserKey>{11}));
  EXPECT_EQ(keys_in(h, 3), (std::vector<UserKey>{12, 13, 14}));
  EXPECT_EQ(h.pivot(3).user, 12);
  EXPECT_TRUE(audit(h).ok()) << audit(h).summary();
}

TEST(ExpDecreaseKey, MovesToFirstSet) {
  std::vector<std::vector<Handle>> hs;
  ExpHeap h = ExpHeap::from_sets({{1}, {10, 11}, {20, 21, 22}}, &hs);
  h.decrease_key(hs[2][1], 5);
  EXPECT_EQ(keys_in(h, 1), (std::vector<UserKey>{1, 5}));
  EXPECT_EQ(keys_in(h, 3), (std::vector<UserKey>{20, 22}));
}

TEST(ExpDecreaseKey, SameInterval) {
  std::vector<std::vector<Handle>> hs;
  ExpHeap h = ExpHeap::from_sets({{1}, {10, 14}}, &hs);
  h.decrease_key(hs[1][1], 12);
  EXPECT_EQ(keys_in(h, 2), (std::vector<UserKey>{10, 12}));
  EXPECT_THROW(h.decrease_key(hs[1][1], 13), HeapError);
}

TEST(ExpDecreaseKey, FillingASetPushesIt) {
  std::vector<std::vector<Handle>> hs;
  ExpHeap h = ExpHeap::from_sets({range(0, 5), range(100, 3)}, &hs);
  h.decrease_key(hs[1][2], 50);
  EXPECT_TRUE(h.level(1).empty());
  EXPECT_EQ(h.level(2).size(), 8u);
}

TEST(ExpPotential, EmptyLevels) {
  ExpHeap h = ExpHeap::from_sets({{}, {}, {}});
  const Potential p = h.potential();
  EXPECT_EQ(p.parts[0], 0);
  EXPECT_EQ(p.parts[1], 0);
  EXPECT_EQ(p.parts[2], (1 << 3) - 1);
}

TEST(ExpPotential, FiveInFirstSet) {
  ExpHeap h = ExpHeap::from_sets({range(0, 5)});
  const Potential want = reference_potential({5});
  EXPECT_EQ(want.parts, (std::array<std::int64_t, 3>{0, 2, 0}));
  EXPECT_EQ(h.potential().parts, want.parts);
}

TEST(ExpPotential, ElevenInSecondSet) {
  ExpHeap h = ExpHeap::from_sets({{}, range(0, 11)});
  const Potential want = reference_potential({0, 11});
  EXPECT_EQ(want.parts, (std::array<std::int64_t, 3>{1, 2, 1}));
  EXPECT_EQ(h.potential().parts, want.parts);
}

TEST(ExpPotential, MatchesReferenceDuringRandomRun) {
  std::mt19937_64 rng(77);
  ExpHeap h;
  for (int op = 0; op < 3000; ++op) {
    if (h.empty() || rng() % 3 != 0) {
      h.insert(static_cast<UserKey>(rng() % 100000));
    } else {
      h.delete_min();
    }
    std::vector<std::size_t> sizes;
    for (std::size_t i = 1; i <= h.level_count(); ++i) sizes.push_back(h.level(i).size());
    ASSERT_EQ(h.potential().parts, reference_potential(sizes).parts) << "op " << op;
  }
}
