#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "cyclemix/partition.hpp"

using namespace cyclemix;

namespace {

// Standard Young tableaux counted by placing 1..n one at a time: row r may
// take the next entry while it is shorter than row r - 1.
mpz_class count_tableaux(const Partition& shape) {
  std::map<std::vector<int>, mpz_class> memo;
  std::vector<int> filled(shape.length(), 0);
  auto rec = [&](auto&& self, int placed) -> mpz_class {
    if (placed == shape.size()) return 1;
    if (auto it = memo.find(filled); it != memo.end()) return it->second;
    mpz_class total = 0;
    for (int r = 0; r < shape.length(); ++r) {
      if (filled[r] == shape[r]) continue;
      if (r > 0 && filled[r] == filled[r - 1]) continue;
      ++filled[r];
      total += self(self, placed + 1);
      --filled[r];
    }
    memo[filled] = total;
    return total;
  };
  return rec(rec, 0);
}

using Cell = std::pair<int, int>;

std::set<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  std::set<Cell> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = inner[r]; c < outer[r]; ++c) cells.insert({r, c});
  return cells;
}

bool is_rim_hook(const std::set<Cell>& cells) {
  if (cells.empty()) return false;
  for (const auto& [r, c] : cells)
    if (cells.count({r + 1, c}) && cells.count({r, c + 1}) && cells.count({r + 1, c + 1}))
      return false;
  std::set<Cell> seen{*cells.begin()};
  std::vector<Cell> stack{*cells.begin()};
  while (!stack.empty()) {
    const auto [r, c] = stack.back();
    stack.pop_back();
    for (const Cell& nb : {Cell{r + 1, c}, Cell{r - 1, c}, Cell{r, c + 1}, Cell{r, c - 1}})
      if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == cells.size();
}

// (inner, leg) pairs for every rim-j hook of lambda, by inspecting every
// skew shape lambda / mu with |mu| = |lambda| - j.
std::set<std::pair<Partition, int>> brute_rim_hooks(const Partition& lambda, int j) {
  std::set<std::pair<Partition, int>> out;
  if (lambda.size() < j) return out;
  for (const Partition& mu : partitions_of(lambda.size() - j)) {
    if (!lambda.contains(mu)) continue;
    const auto cells = skew_cells(lambda, mu);
    if (!is_rim_hook(cells)) continue;
    std::set<int> rows;
    for (const auto& cell : cells) rows.insert(cell.first);
    out.insert({mu, static_cast<int>(rows.size()) - 1});
  }
  return out;
}

std::set<std::pair<Partition, int>> as_set(const std::vector<RimHook>& hooks, bool inner) {
  std::set<std::pair<Partition, int>> out;
  for (const RimHook& h : hooks) out.insert({inner ? h.inner : h.outer, h.leg_length});
  return out;
}

}  // namespace

TEST(Partition, RejectsMalformedInput) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({3, -1}), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,x"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,2.5"), std::invalid_argument);
  EXPECT_EQ(Partition::parse("6,2,2"), Partition({6, 2, 2}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
}

TEST(Partition, Accessors) {
  const Partition p{4, 2, 2, 1};
  EXPECT_EQ(p.size(), 9);
  EXPECT_EQ(p.length(), 4);
  EXPECT_EQ(p[7], 0);
  EXPECT_EQ(p.conjugate(), Partition({4, 3, 1, 1}));
  EXPECT_EQ(p.multiplicity(2), 2);
  EXPECT_EQ(p.below_first_row(), Partition({2, 2, 1}));
  EXPECT_EQ(Partition::with_first_row(5, Partition{2, 1}), Partition({5, 2, 1}));
  EXPECT_THROW(Partition::with_first_row(1, Partition{2}), std::invalid_argument);
  EXPECT_EQ(p.str(), "(4,2,2,1)");
  EXPECT_EQ(Partition().str(), "()");
}

TEST(Partition, OrderingMatchesDisplayOrder) {
  EXPECT_LT(Partition({8}), Partition({6, 2}));
  EXPECT_LT(Partition({6, 2}), Partition({6, 1, 1}));
  EXPECT_LT(Partition({6, 1, 1}), Partition({4, 4}));
  EXPECT_LT(Partition({7}), Partition({1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(Partition, PartitionCounts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    const auto ps = partitions_of(n);
    EXPECT_EQ(static_cast<int>(ps.size()), expected[n]) << n;
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  }
  EXPECT_EQ(partitions_of(25).size(), 1958u);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(Partition{9}), 1);
  EXPECT_EQ(dimension(Partition{1, 1, 1}), 1);
  EXPECT_EQ(dimension(Partition{5, 1, 1}), 15);
  EXPECT_EQ(dimension(Partition{6, 1}), 6);
  EXPECT_EQ(dimension(Partition()), 1);
}

TEST(Dimension, MatchesTableauEnumeration) {
  for (int n = 1; n <= 10; ++n)
    for (const Partition& lambda : partitions_of(n))
      EXPECT_EQ(dimension(lambda), count_tableaux(lambda)) << lambda;
}

TEST(Dimension, Plancherel) {
  for (int n = 1; n <= 12; ++n) {
    mpz_class total = 0;
    for (const Partition& lambda : partitions_of(n)) total += dimension(lambda) * dimension(lambda);
    EXPECT_EQ(total, factorial(n)) << n;
  }
}

TEST(Dimension, BranchingRule) {
  for (int n = 1; n <= 25; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      mpz_class total = 0;
      for (const auto& removal : inner_corner_removals(lambda)) total += dimension(removal.result);
      ASSERT_EQ(total, dimension(lambda)) << lambda;
    }
}

TEST(CornerRemovals, Examples) {
  auto r = inner_corner_removals(Partition{7});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].row, 1);
  EXPECT_EQ(r[0].result, Partition({6}));

  r = inner_corner_removals(Partition{6, 1});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].row, 1);
  EXPECT_EQ(r[0].result, Partition({5, 1}));
  EXPECT_EQ(r[1].row, 2);
  EXPECT_EQ(r[1].result, Partition({6}));

  r = inner_corner_removals(Partition{4, 4});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].row, 2);
  EXPECT_EQ(r[0].result, Partition({4, 3}));

  EXPECT_THROW(inner_corner_removals(Partition()), std::invalid_argument);
}

TEST(RimHooks, RemovableExamples) {
  auto hooks = removable_rim_hooks(Partition{8}, 2);
  ASSERT_EQ(hooks.size(), 1u);
  EXPECT_EQ(hooks[0].inner, Partition({6}));
  EXPECT_EQ(hooks[0].leg_length, 0);

  EXPECT_EQ(as_set(removable_rim_hooks(Partition{6, 2}, 2), true),
            (std::set<std::pair<Partition, int>>{{Partition{6}, 0}, {Partition{4, 2}, 0}}));

  // The vertical domino to (6) has odd leg; the horizontal one to (4,1,1) does not.
  EXPECT_EQ(as_set(removable_rim_hooks(Partition{6, 1, 1}, 2), true),
            (std::set<std::pair<Partition, int>>{{Partition{6}, 1}, {Partition{4, 1, 1}, 0}}));
}

TEST(RimHooks, AddableExamples) {
  EXPECT_EQ(as_set(addable_rim_hooks(Partition{6}, 2, 8), false),
            (std::set<std::pair<Partition, int>>{
                {Partition{8}, 0}, {Partition{6, 2}, 0}, {Partition{6, 1, 1}, 1}}));
  EXPECT_EQ(as_set(addable_rim_hooks(Partition(), 3, 3), false),
            (std::set<std::pair<Partition, int>>{
                {Partition{3}, 0}, {Partition{2, 1}, 1}, {Partition{1, 1, 1}, 2}}));
  EXPECT_EQ(as_set(addable_rim_hooks(Partition{4, 2}, 2, 8), false),
            (std::set<std::pair<Partition, int>>{{Partition{6, 2}, 0},
                                                 {Partition{4, 4}, 0},
                                                 {Partition{4, 2, 2}, 0},
                                                 {Partition{4, 2, 1, 1}, 1}}));
  EXPECT_THROW(addable_rim_hooks(Partition{2}, 2, 5), std::invalid_argument);
}

TEST(RimHooks, MatchSkewShapeEnumeration) {
  for (int n = 0; n <= 10; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int j = 1; j <= 4; ++j)
        ASSERT_EQ(as_set(removable_rim_hooks(lambda, j), true), brute_rim_hooks(lambda, j))
            << lambda << " j=" << j;
}

TEST(RimHooks, RemovalAndAdditionAreDual) {
  for (int m = 0; m <= 8; ++m)
    for (int j = 1; j <= 4; ++j)
      for (const Partition& mu : partitions_of(m)) {
        std::set<std::pair<Partition, int>> from_above;
        for (const Partition& lambda : partitions_of(m + j))
          for (const RimHook& h : removable_rim_hooks(lambda, j))
            if (h.inner == mu) from_above.insert({lambda, h.leg_length});
        ASSERT_EQ(as_set(addable_rim_hooks(mu, j, m + j), false), from_above)
            << mu << " j=" << j;
      }
}

TEST(RimHooks, HookFieldsAreConsistent) {
  for (const Partition& lambda : partitions_of(9))
    for (int j = 1; j <= 5; ++j)
      for (const RimHook& h : removable_rim_hooks(lambda, j)) {
        EXPECT_EQ(h.outer, lambda);
        EXPECT_EQ(h.length, j);
        EXPECT_EQ(h.inner.size() + j, lambda.size());
        EXPECT_TRUE(lambda.contains(h.inner));
      }
}

TEST(RimHooks, SizeOneHooksAreCorners) {
  for (int n = 1; n <= 9; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      std::set<std::pair<Partition, int>> corners;
      for (const auto& removal : inner_corner_removals(lambda)) corners.insert({removal.result, 0});
      EXPECT_EQ(as_set(removable_rim_hooks(lambda, 1), true), corners) << lambda;
    }
}
