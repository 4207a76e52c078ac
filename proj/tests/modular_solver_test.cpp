#include <random>

#include <gtest/gtest.h>

#include "ngcat/modular_solver.hpp"

namespace ngcat {
namespace {

bool satisfies(const IntMatrix& a, const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& x,
               std::int64_t n) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
    if (((s - b[i]) % n + n) % n != 0) return false;
  }
  return true;
}

// Oracle: exhaustive search over Z_n^cols.
bool brute_force_solvable(const IntMatrix& a, const std::vector<std::int64_t>& b, std::size_t cols, std::int64_t n) {
  std::vector<std::int64_t> x(cols, 0);
  while (true) {
    if (satisfies(a, b, x, n)) return true;
    std::size_t i = 0;
    while (i < cols && ++x[i] == n) x[i++] = 0;
    if (i == cols) return false;
  }
}

TEST(SolveMod, UnitAndZeroDivisorPivots) {
  // 2x ≡ 1 (mod 4) has no solution; 2x ≡ 2 (mod 4) does.
  EXPECT_FALSE(solve_mod({{2}}, {1}, 4).has_value());
  auto x = solve_mod({{2}}, {2}, 4);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies({{2}}, {2}, *x, 4));
  // 6x ≡ 3 (mod 36): gcd 6 does not divide 3
  EXPECT_FALSE(solve_mod({{6}}, {3}, 36).has_value());
  EXPECT_TRUE(solve_mod({{6}}, {30}, 36).has_value());
}

TEST(SolveMod, EmptyAndTrivialSystems) {
  auto x = solve_mod({{0, 0}, {0, 0}}, {0, 0}, 36);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (std::vector<std::int64_t>{0, 0}));
  EXPECT_FALSE(solve_mod({{0, 0}}, {1}, 36).has_value());
  EXPECT_TRUE(solve_mod({}, {}, 36).has_value());
}

TEST(SolveMod, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (std::int64_t n : {4, 8, 9, 12, 36, 7}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 1 + rng() % (n > 12 ? 2 : 3);
      IntMatrix a(rows, std::vector<std::int64_t>(cols));
      std::vector<std::int64_t> b(rows);
      for (auto& row : a)
        for (auto& v : row) v = static_cast<std::int64_t>(rng() % n);
      // Half the systems are consistent by construction.
      if (trial % 2 == 0) {
        std::vector<std::int64_t> x0(cols);
        for (auto& v : x0) v = static_cast<std::int64_t>(rng() % n);
        for (std::size_t i = 0; i < rows; ++i) {
          std::int64_t s = 0;
          for (std::size_t j = 0; j < cols; ++j) s += a[i][j] * x0[j];
          b[i] = s % n;
        }
      } else {
        for (auto& v : b) v = static_cast<std::int64_t>(rng() % n);
      }
      const auto x = solve_mod(a, b, n);
      EXPECT_EQ(x.has_value(), brute_force_solvable(a, b, cols, n)) << "n=" << n << " trial=" << trial;
      if (x) EXPECT_TRUE(satisfies(a, b, *x, n));
    }
  }
}

TEST(SolveMod, Deterministic) {
  const IntMatrix a{{1, 1, 0}, {0, 2, 2}};
  const std::vector<std::int64_t> b{3, 4};
  EXPECT_EQ(solve_mod(a, b, 36), solve_mod(a, b, 36));
}

}  // namespace
}  // namespace ngcat
