#include <map>
#include <queue>
#include <random>

#include <gtest/gtest.h>

#include "iml/core/error.hpp"
#include "iml/gl2/gl2.hpp"

namespace iml::gl2 {
namespace {

using Dense = std::vector<std::vector<int>>;

Dense dense(const Gf2Matrix& m) {
  Dense d(m.size(), std::vector<int>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) d[i][j] = m.get(i, j);
  return d;
}

// Breadth-first search over dense matrices, with row or column operations.
std::map<Dense, int> bfs(int n, bool columns) {
  Dense id(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::map<Dense, int> dist{{id, 0}};
  std::queue<Dense> q;
  q.push(id);
  while (!q.empty()) {
    Dense a = q.front();
    q.pop();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Dense b = a;
        for (int k = 0; k < n; ++k) {
          if (columns) b[k][i] ^= b[k][j];
          else b[i][k] ^= b[j][k];
        }
        if (dist.emplace(b, dist[a] + 1).second) q.push(b);
      }
  }
  return dist;
}

TEST(Gf2MatrixTest, Algebra) {
  std::mt19937_64 rng(1);
  for (int n : {1, 3, 7, 64, 65, 130}) {
    auto a = random_invertible(n, rng), b = random_invertible(n, rng);
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE((a.inverse() * a).is_identity());
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    EXPECT_EQ(from_hex(to_hex(a)), a);
    EXPECT_EQ((a + a).rank(), 0);
  }
  Gf2Matrix z(3);
  EXPECT_FALSE(z.invertible());
  EXPECT_THROW(z.inverse(), Error);
  EXPECT_EQ(to_hex(elementary(3, 0, 2)), "5,2,4");
  EXPECT_EQ(from_hex("5,2,4"), elementary(3, 0, 2));
  EXPECT_THROW(from_hex("9,2,4"), Error);
  EXPECT_THROW(from_hex("g,2,4"), Error);
  auto e = elementary(5, 1, 3);
  EXPECT_EQ(Gf2Matrix::from_key(5, e.key()), e);
}

TEST(DistanceTest, Examples) {
  EXPECT_EQ(distance(Gf2Matrix::identity(4)).distance, 0);
  EXPECT_EQ(distance(elementary(2, 0, 1)).distance, 1);
  auto swap = from_hex("2,1");
  auto d = distance(swap);
  EXPECT_EQ(d.distance, 3);
  EXPECT_TRUE(replay_reduces(swap, d.word));
  EXPECT_EQ(diameter(2).diameter, 3);
  EXPECT_THROW(distance(Gf2Matrix(3)), Error);
  EXPECT_THROW(distance(Gf2Matrix::identity(6)), Error);
}

TEST(DistanceTest, MatchesDenseBfs) {
  for (int n = 2; n <= 4; ++n) {
    auto oracle = bfs(n, false);
    long long count = 0;
    for (auto& [a, d] : oracle) {
      Gf2Matrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, a[i][j]);
      auto got = distance(m);
      ASSERT_EQ(got.distance, d) << to_hex(m);
      ASSERT_EQ(static_cast<int>(got.word.size()), d);
      ASSERT_TRUE(replay_reduces(m, got.word));
      ++count;
    }
    auto diam = diameter(n);
    int want = 0;
    long long extremal = 0;
    for (auto& [a, d] : oracle) want = std::max(want, d);
    for (auto& [a, d] : oracle) extremal += d == want;
    EXPECT_EQ(diam.diameter, want);
    EXPECT_EQ(diam.extremal_count, extremal);
    long long total = 0;
    for (long long x : diam.layers) total += x;
    EXPECT_EQ(total, count);
    for (const auto& m : diam.extremal) EXPECT_EQ(oracle.at(dense(m)), want);
  }
}

TEST(DistanceTest, ColumnOperationsGiveTheSameDiameter) {
  for (int n = 2; n <= 3; ++n) {
    auto rows = bfs(n, false), cols = bfs(n, true);
    ASSERT_EQ(rows.size(), cols.size());
    int dr = 0, dc = 0;
    for (auto& [a, d] : rows) dr = std::max(dr, d);
    for (auto& [a, d] : cols) dc = std::max(dc, d);
    EXPECT_EQ(dr, dc);
    EXPECT_EQ(diameter(n).diameter, dc);
  }
}

TEST(DistanceTest, InverseAndTriangle) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 200; ++t) {
      auto a = random_invertible(n, rng), b = random_invertible(n, rng);
      int da = distance(a).distance;
      EXPECT_EQ(da, distance(a.inverse()).distance);
      EXPECT_LE(distance(a * b).distance, da + distance(b).distance);
      EXPECT_GE(da, rank_lower_bound(a));
    }
}

TEST(GreedyTest, ReplaysAndBoundsDistance) {
  std::mt19937_64 rng(9);
  EXPECT_EQ(greedy_reduce(Gf2Matrix::identity(10)).count, 0);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 200; ++t) {
      auto m = random_invertible(n, rng);
      auto r = greedy_reduce(m);
      ASSERT_TRUE(replay_reduces(m, r.ops));
      EXPECT_GE(r.count, distance(m).distance);
    }
  for (int n : {8, 33, 64, 100, 200}) {
    for (int t = 0; t < 10; ++t) {
      auto m = random_invertible(n, rng);
      auto r = greedy_reduce(m);
      ASSERT_TRUE(replay_reduces(m, r.ops)) << n;
      EXPECT_EQ(r.block, block_width(n));
      EXPECT_GE(r.count, rank_lower_bound(m));
    }
  }
  EXPECT_THROW(greedy_reduce(Gf2Matrix(4)), Error);
  EXPECT_EQ(block_width(4), 1);
  EXPECT_EQ(block_width(64), 4);
  EXPECT_EQ(block_width(256), 6);
}

TEST(HardInstanceTest, CertificatesHold) {
  auto small = hard_instance_search(4, 50, 3);
  EXPECT_EQ(small.certificate, "exact");
  EXPECT_EQ(small.lower, diameter(4).diameter);
  EXPECT_GE(small.upper, small.lower);

  auto big = hard_instance_search(6, 20, 3, 50000);
  EXPECT_TRUE(big.matrix.invertible());
  EXPECT_GE(big.upper, big.lower);
  EXPECT_GE(big.lower, rank_lower_bound(big.matrix));
  EXPECT_TRUE(replay_reduces(big.matrix, greedy_reduce(big.matrix).ops));

  auto wide = hard_instance_search(20, 5, 3);
  EXPECT_EQ(wide.certificate, "rank(m+I)");
  EXPECT_EQ(wide.lower, rank_lower_bound(wide.matrix));
}

}  // namespace
}  // namespace iml::gl2
