#include <gtest/gtest.h>

#include <random>

#include "cmdegen/ar_quiver.hpp"
#include "cmdegen/errors.hpp"
#include "cmdegen/k0.hpp"

using namespace cmdegen;

namespace {

SingularitySpec A(int n, int d) { return {'A', n, d}; }
StableModule one(const IndecId& x, int k = 1) { return StableModule::of(x, k); }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), std::vector<std::int64_t>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void expect_smith(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  auto d = multiply(multiply(s.u, a), s.v);
  const std::size_t cols = a[0].size();
  ASSERT_EQ(s.diagonal.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) EXPECT_EQ(d[i][j], i == j ? s.diagonal[j] : 0);
  EXPECT_EQ(multiply(s.v, s.v_inverse), identity(cols));
  EXPECT_EQ(multiply(s.v_inverse, s.v), identity(cols));
  for (std::size_t k = 0; k < cols; ++k) {
    EXPECT_GE(s.diagonal[k], 0);
    if (k + 1 < cols && s.diagonal[k] != 0) {
      EXPECT_EQ(s.diagonal[k + 1] % s.diagonal[k], 0);
    }
    if (k > 0 && s.diagonal[k - 1] == 0) {
      EXPECT_EQ(s.diagonal[k], 0);
    }
  }
}

}  // namespace

TEST(K0, SmithExamples) {
  auto s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(s.diagonal, (std::vector<std::int64_t>{2, 6, 12}));
  expect_smith({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  s = smith_normal_form({{0, 0}, {0, 0}});
  EXPECT_EQ(s.diagonal, (std::vector<std::int64_t>{0, 0}));
  s = smith_normal_form({{4, 6}});
  EXPECT_EQ(s.diagonal, (std::vector<std::int64_t>{2, 0}));
}

TEST(K0, SmithRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), std::vector<std::int64_t>(static_cast<std::size_t>(dim(rng))));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    expect_smith(a);
  }
}

TEST(K0, SmithOverflowIsReported) {
  const std::int64_t big = std::int64_t{1} << 62;
  EXPECT_THROW(smith_normal_form({{big, big - 1}, {big - 3, big}}), ConsistencyError);
}

TEST(K0, Groups) {
  EXPECT_EQ(group_name(k0_presentation(A(1, 1)).invariant_factors()), "Z");
  EXPECT_EQ(group_name(k0_presentation(A(2, 1)).invariant_factors()), "0");
  EXPECT_EQ(group_name(k0_presentation(A(4, 1)).invariant_factors()), "0");
  EXPECT_EQ(group_name(k0_presentation(A(3, 1)).invariant_factors()), "Z");
  EXPECT_EQ(group_name(k0_presentation(A(2, 0)).invariant_factors()), "Z/3");
  EXPECT_EQ(group_name(k0_presentation(A(5, 2)).invariant_factors()), "Z/6");
  EXPECT_EQ(group_name({2, 0}), "Z/2 + Z");
  EXPECT_EQ(group_name({}), "0");
}

TEST(K0, ArtinianClassIsLengthModulo) {
  for (int n = 1; n <= 8; ++n) {
    const auto& pres = k0_presentation(A(n, 0));
    ASSERT_EQ(pres.invariant_factors(), std::vector<std::int64_t>{n + 1});
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        EXPECT_EQ(same_class(pres, one(IndecId::jordan(i)), one(IndecId::jordan(j))), i == j);
    // M_i ⊕ M_{n+1-i} is zero in K0.
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(k0_class(pres, one(IndecId::jordan(i)) + one(IndecId::jordan(n + 1 - i))),
                k0_class(pres, StableModule{}));
  }
}

TEST(K0, SameClassExamples) {
  const auto& p1 = k0_presentation(A(1, 1));
  EXPECT_FALSE(same_class(p1, one(IndecId::plus()), one(IndecId::minus())));
  EXPECT_TRUE(same_class(p1, one(IndecId::plus()) + one(IndecId::minus()), StableModule{}));
  const auto& p5 = k0_presentation(A(5, 1));
  EXPECT_TRUE(same_class(p5, one(IndecId::ideal(1)), one(IndecId::ideal(2))));
}

TEST(K0, ARRelationsVanish) {
  for (int n = 1; n <= 12; ++n)
    for (int d = 0; d <= 1; ++d) {
      auto s = A(n, d);
      const auto& pres = k0_presentation(s);
      for (const auto& tri : ar_quiver(s))
        EXPECT_EQ(k0_class(pres, one(tri.end) + one(tri.translate)), k0_class(pres, tri.middle));
      // Ω acts as -1 on K0.
      for (const auto& m : enumerate_modules(s, 2))
        EXPECT_EQ(k0_class(pres, m + syzygy(s, m)), k0_class(pres, StableModule{}));
    }
}

TEST(K0, ClassIsAdditive) {
  auto s = A(3, 1);
  const auto& pres = k0_presentation(s);
  auto mods = enumerate_modules(s, 2);
  for (const auto& a : mods)
    for (const auto& b : mods)
      for (const auto& c : mods) {
        if (k0_class(pres, a) == k0_class(pres, b)) {
          EXPECT_EQ(k0_class(pres, a + c), k0_class(pres, b + c));
        }
      }
}
