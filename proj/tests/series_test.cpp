#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace nassoc;
using namespace nassoc::testing;

TEST(Series, T3RightPower) {
  auto t3 = make_truncated_polynomial(F2, 3);
  auto s = compute_series(t3, SeriesKind::RightPower);
  EXPECT_TRUE(s.term(1).is_full());
  EXPECT_EQ(s.term(2), basis_span(t3, {1, 2}));
  EXPECT_EQ(s.term(3), basis_span(t3, {2}));
  EXPECT_TRUE(s.term(4).is_zero());
  EXPECT_TRUE(s.terminated);
  EXPECT_EQ(s.index, 4u);
}

TEST(Series, AexRightPowerStabilizes) {
  auto aex = make_A_ex(F2);
  auto s = compute_series(aex, SeriesKind::RightPower);
  EXPECT_FALSE(s.terminated);
  EXPECT_FALSE(s.index.has_value());
  EXPECT_EQ(s.term(2), basis_span(aex, {0}));
  EXPECT_EQ(s.term(3), basis_span(aex, {0}));
  EXPECT_EQ(s.term(10), basis_span(aex, {0}));
  auto d = compute_series(aex, SeriesKind::Derived);
  EXPECT_FALSE(d.terminated);
  EXPECT_EQ(d.term(3), basis_span(aex, {0}));
}

TEST(Series, ZeroAlgebraDerived) {
  auto s = compute_series(make_zero_algebra(F2, 2), SeriesKind::Derived);
  EXPECT_TRUE(s.terminated);
  EXPECT_EQ(s.index, 2u);
}

TEST(Series, Profiles) {
  auto p = nilpotency_profile(make_truncated_polynomial(F2, 3));
  EXPECT_TRUE(p.solvable && p.right_nilpotent && p.left_nilpotent && p.weakly_nilpotent && p.nilpotent);
  EXPECT_EQ(p.nilpotent_index, 4u);
  auto a = nilpotency_profile(make_A_ex(F2));
  EXPECT_FALSE(a.solvable || a.right_nilpotent || a.left_nilpotent || a.weakly_nilpotent || a.nilpotent);
  auto n = nilpotency_profile(make_N1(F2));
  EXPECT_TRUE(n.nilpotent && n.solvable && n.weakly_nilpotent);
  EXPECT_EQ(n.nilpotent_index, 3u);
}

TEST(Series, LeftVersusRightNilpotent) {
  // e0 e0 = e1, e1 e0 = e1: right powers A^k = A^{k-1}A stay at span{e1};
  // left powers A A^{k-1} reach 0.
  auto A = table(F2, 2, {{0, 0, {0, 1}}, {1, 0, {0, 1}}});
  auto p = nilpotency_profile(A);
  EXPECT_FALSE(p.right_nilpotent);
  EXPECT_TRUE(p.left_nilpotent);
  EXPECT_TRUE(p.solvable);
  EXPECT_FALSE(p.nilpotent);
}

TEST(Series, SubalgebraProfile) {
  auto aex = make_A_ex(F2);
  auto p = nilpotency_profile(aex, basis_span(aex, {1}));
  EXPECT_TRUE(p.nilpotent);
  auto q = nilpotency_profile(aex, basis_span(aex, {0}));
  EXPECT_FALSE(q.solvable);
}

TEST(Series, ChiefSeries) {
  EnumerationBudget b;
  auto aex = make_A_ex(F2);
  auto c = chief_series(aex, aex.zero_subspace(), aex.whole(), b);
  ASSERT_EQ(c.ideals.size(), 3u);
  EXPECT_EQ(c.ideals[1], basis_span(aex, {0}));
  auto t3 = make_truncated_polynomial(F2, 3);
  auto ct = chief_series(t3, t3.zero_subspace(), t3.whole(), b);
  ASSERT_EQ(ct.ideals.size(), 4u);
  EXPECT_EQ(ct.ideals[1], basis_span(t3, {2}));
  EXPECT_EQ(ct.ideals[2], basis_span(t3, {1, 2}));
  auto z2 = make_zero_algebra(F2, 2);
  auto cz = chief_series(z2, z2.zero_subspace(), z2.whole(), b);
  ASSERT_EQ(cz.ideals.size(), 3u);
  EXPECT_EQ(cz.ideals[1], basis_span(z2, {0}));
}

TEST(Series, ChiefSeriesOverQIsUnsupported) {
  auto a = make_A_ex(Q);
  EXPECT_THROW(chief_series(a, a.zero_subspace(), a.whole(), EnumerationBudget{}), Error);
}

// Series terms descend; power and derived terms are subalgebras, bracket terms
// are ideals; nilpotent implies every other flag.
TEST(SeriesProperty, Shape) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const auto& f = it % 3 == 0 ? F3 : (it % 3 == 1 ? F2 : Q);
    auto A = random_algebra(rng, f, 1 + rng() % 4);
    for (auto k : {SeriesKind::Derived, SeriesKind::RightPower, SeriesKind::LeftPower, SeriesKind::BracketPower}) {
      auto s = compute_series(A, k);
      ASSERT_FALSE(s.terms.empty());
      EXPECT_TRUE(s.terms.front().is_full());
      for (std::size_t i = 1; i < s.terms.size(); ++i) {
        EXPECT_TRUE(contains(s.terms[i - 1], s.terms[i]));
        EXPECT_TRUE(is_subalgebra(A, s.terms[i]));
        if (k == SeriesKind::BracketPower) EXPECT_TRUE(is_ideal(A, s.terms[i]));
      }
      EXPECT_EQ(s.terminated, s.terms.back().is_zero());
    }
    auto p = nilpotency_profile(A);
    if (p.nilpotent) EXPECT_TRUE(p.right_nilpotent && p.left_nilpotent && p.solvable && p.weakly_nilpotent);
    if (p.right_nilpotent || p.left_nilpotent) EXPECT_TRUE(p.solvable);
    EXPECT_EQ(p.weakly_nilpotent, p.right_nilpotent && p.left_nilpotent);
  }
}
