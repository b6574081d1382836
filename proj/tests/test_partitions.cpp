#include "ucm/multipartition.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ucm;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Removes dominoes from the diagram one at a time until none is left.
Partition core_by_domino_removal(std::vector<int> rows) {
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < rows.size() && !removed; ++i) {
      const int below = i + 1 < rows.size() ? rows[i + 1] : 0;
      // horizontal domino at the end of row i
      if (rows[i] - below >= 2) {
        rows[i] -= 2;
        removed = true;
        break;
      }
      // vertical domino ending rows i and i+1
      const int below2 = i + 2 < rows.size() ? rows[i + 2] : 0;
      if (i + 1 < rows.size() && rows[i] == rows[i + 1] && rows[i + 1] > below2) {
        rows[i] -= 1;
        rows[i + 1] -= 1;
        removed = true;
      }
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
  }
  return Partition(rows);
}

std::vector<int> hooks_by_walking(const Partition& p) {
  std::vector<int> out;
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j) {
      const int arm = p[static_cast<std::size_t>(i)] - j - 1;
      int leg = 0;
      for (int k = i + 1; k < p.length() && p[static_cast<std::size_t>(k)] > j; ++k) ++leg;
      out.push_back(arm + leg + 1);
    }
  }
  return out;
}

}  // namespace

TEST(Partitions, Enumerate) {
  EXPECT_EQ(enumerate_partitions(0), (std::vector<Partition>{Partition()}));
  EXPECT_EQ(enumerate_partitions(4),
            (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(enumerate_partitions(6).size(), 11u);
  EXPECT_EQ(enumerate_partitions(20).size(), 627u);
  for (int n = 1; n <= 12; ++n) {
    const auto all = enumerate_partitions(n);
    EXPECT_TRUE(std::is_sorted(all.rbegin(), all.rend()));
    for (const auto& p : all) EXPECT_EQ(p.size(), n);
  }
  EXPECT_THROW(Partition({1, 2}), DomainError);
}

TEST(Partitions, Hooks) {
  EXPECT_EQ(hook_lengths(Partition{1}), (std::vector<int>{1}));
  EXPECT_EQ(hook_lengths(Partition{2}), (std::vector<int>{2, 1}));
  EXPECT_EQ(sorted(hook_lengths(Partition{3, 2, 1})), (std::vector<int>{1, 1, 1, 3, 3, 5}));
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(hook_lengths(p), hooks_by_walking(p));
  }
}

TEST(Partitions, NStatAndConjugate) {
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(n_stat(Partition::column(m)), m * (m - 1) / 2);
    EXPECT_EQ(n_stat(Partition::row(m)), 0);
  }
  EXPECT_EQ(conjugate(Partition{3, 2, 1}), (Partition{3, 2, 1}));
  EXPECT_EQ(conjugate(Partition{4, 1}), (Partition{2, 1, 1, 1}));
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      int binomials = 0;
      for (int part : p.parts()) binomials += part * (part - 1) / 2;
      EXPECT_EQ(n_stat(conjugate(p)), binomials);
    }
  }
}

TEST(Partitions, TwoCoreExamples) {
  EXPECT_EQ(two_core(Partition{3, 2, 1}), (Partition{3, 2, 1}));
  EXPECT_EQ(two_core(Partition{2}), Partition());
  EXPECT_EQ(ohl_ehl(Partition{3, 2, 1}), std::make_pair(6, 0));
  EXPECT_EQ(two_weight(Partition{4, 2}), 3);
}

TEST(Partitions, TwoCoreMatchesDominoRemoval) {
  for (int n = 0; n <= 14; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(two_core(p), core_by_domino_removal(p.parts())) << to_string(p);
    }
  }
}

TEST(Partitions, TwoCoreProperties) {
  for (int n = 0; n <= 20; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const Partition core = two_core(p);
      // empty or a staircase (k, k-1, ..., 1)
      for (int i = 0; i < core.length(); ++i) EXPECT_EQ(core[static_cast<std::size_t>(i)], core.length() - i);
      EXPECT_EQ(p.size(), core.size() + 2 * two_weight(p));
      const auto [odd, even] = ohl_ehl(p);
      EXPECT_EQ(odd - even, core.size()) << to_string(p);
    }
  }
}

TEST(MultiPartitions, Counts) {
  const TorusContext ctx(3, 4);
  EXPECT_EQ(enumerate_multipartitions(ctx, 0, Side::character).size(), 1u);
  EXPECT_EQ(enumerate_multipartitions(ctx, 1, Side::character).size(), 4u);
  EXPECT_EQ(enumerate_multipartitions(ctx, 2, Side::character).size(), 16u);
  for (int n = 0; n <= 4; ++n) {
    const auto theta = enumerate_multipartitions(ctx, n, Side::character);
    EXPECT_EQ(theta.size(), enumerate_multipartitions(ctx, n, Side::element).size());
    EXPECT_TRUE(std::is_sorted(theta.begin(), theta.end()));
    for (const auto& mp : theta) EXPECT_EQ(mp.size(), n);
  }
}

TEST(MultiPartitions, Stats) {
  const TorusContext ctx(3, 3);
  const MultiPartition single(Side::character, {{OrbitLabel{Side::character, 2, 1}, Partition{1}}});
  EXPECT_EQ(weighted_hooks(single), (std::vector<int>{2}));
  const auto stats = mp_stats(ctx, single);
  EXPECT_EQ(stats.size, 2);
  EXPECT_EQ(stats.n, 0);
  EXPECT_EQ(stats.length, 1);
  EXPECT_EQ(stats.bar, MultiPartition(Side::character, {{OrbitLabel{Side::character, 2, 3}, Partition{1}}}));
  const MultiPartition unip(Side::character, {{trivial_orbit(Side::character), Partition{2, 1}}});
  EXPECT_EQ(bar(ctx, unip), unip);
  EXPECT_EQ(n_stat(MultiPartition(Side::character, {{OrbitLabel{Side::character, 2, 1}, Partition{1, 1}}})), 2);
  for (int n = 0; n <= 3; ++n) {
    for (const auto& mp : enumerate_multipartitions(ctx, n, Side::character)) EXPECT_EQ(bar(ctx, bar(ctx, mp)), mp);
  }
}

TEST(MultiPartitions, Text) {
  const MultiPartition mp(Side::character, {{trivial_orbit(Side::character), Partition{1, 1}},
                                            {OrbitLabel{Side::character, 2, 1}, Partition{1}}});
  EXPECT_EQ(to_string(mp), "theta:1:0=(1,1)|theta:2:1=(1)");
  EXPECT_EQ(to_string(MultiPartition(Side::element)), "{}");
  EXPECT_THROW(MultiPartition(Side::element).set(trivial_orbit(Side::character), Partition{1}), DomainError);
}
