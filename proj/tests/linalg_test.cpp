#include <gtest/gtest.h>

#include <random>

#include "nassoc/error.hpp"
#include "test_util.hpp"

using namespace nassoc;
using namespace nassoc::testing;

TEST(Linalg, RrefScalesRows) {
  auto m = Matrix::from_rows(Q, 2, {vec(Q, {2, 0}), vec(Q, {0, 2})});
  EXPECT_EQ(rref(m), Matrix::identity(Q, 2));
}

TEST(Linalg, RrefOfZero) {
  Matrix z(Q, 2, 3);
  EXPECT_EQ(rref(z).rows(), 0u);
}

TEST(Linalg, RrefCollapsesDuplicates) {
  auto m = Matrix::from_rows(F2, 2, {vec(F2, {1, 1}), vec(F2, {1, 1})});
  EXPECT_EQ(rref(m), Matrix::from_rows(F2, 2, {vec(F2, {1, 1})}));
}

TEST(Linalg, Span) {
  EXPECT_TRUE(sp(Q, 2, {{1, 0}, {1, 1}}).is_full());
  EXPECT_TRUE(span({}, 3, Q).is_zero());
  auto s = sp(Q, 2, {{2, 4}});
  EXPECT_EQ(s.basis().row_vector(0), vec(Q, {1, 2}));
}

TEST(Linalg, SumIntersect) {
  auto u = sp(F2, 2, {{1, 0}}), v = sp(F2, 2, {{0, 1}});
  EXPECT_TRUE(subspace_sum(u, v).is_full());
  EXPECT_TRUE(subspace_intersect(u, v).is_zero());
  EXPECT_EQ(subspace_sum(u, u), u);
  EXPECT_EQ(subspace_intersect(u, u), u);
  auto a = sp(Q, 3, {{1, 1, 0}}), b = sp(Q, 3, {{1, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(subspace_intersect(a, b), a);
  EXPECT_TRUE(contains(b, a));
  EXPECT_FALSE(contains(a, b));
  EXPECT_TRUE(contains(b, vec(Q, {2, 2, 5})));
}

TEST(Linalg, MembershipSystem) {
  EXPECT_TRUE(solve_membership_system(Matrix::identity(Q, 3)).is_zero());
  EXPECT_TRUE(solve_membership_system(Matrix(Q, 2, 2)).is_full());
  auto k = solve_membership_system(Matrix::from_rows(F2, 2, {vec(F2, {1, 1})}));
  EXPECT_EQ(k, sp(F2, 2, {{1, 1}}));
}

TEST(Linalg, AmbientMismatchRejected) {
  EXPECT_THROW(subspace_sum(Subspace::zero(Q, 2), Subspace::zero(Q, 3)), Error);
  EXPECT_THROW(subspace_sum(Subspace::zero(Q, 2), Subspace::zero(F2, 2)), Error);
}

namespace {

std::vector<Vector> random_vectors(std::mt19937_64& rng, const FieldSpec& f, std::size_t n, std::size_t count) {
  std::vector<Vector> out;
  std::uniform_int_distribution<long> d(-2, 2);
  for (std::size_t c = 0; c < count; ++c) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, rng() % 3 ? 0 : d(rng)));
    out.push_back(v);
  }
  return out;
}

}  // namespace

// dim(U + V) + dim(U meet V) = dim U + dim V, containment and canonical form.
TEST(LinalgProperty, DimensionFormulaAndCanonicalForm) {
  std::mt19937_64 rng(11);
  for (const auto& f : {F2, F3, Q}) {
    for (int it = 0; it < 200; ++it) {
      std::size_t n = 1 + rng() % 5;
      auto gu = random_vectors(rng, f, n, rng() % 4);
      auto gv = random_vectors(rng, f, n, rng() % 4);
      auto u = span(gu, n, f), v = span(gv, n, f);
      auto s = subspace_sum(u, v), i = subspace_intersect(u, v);
      EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
      EXPECT_TRUE(contains(s, u) && contains(s, v));
      EXPECT_TRUE(contains(u, i) && contains(v, i));
      for (const auto& g : gu) EXPECT_TRUE(u.contains(g));
      // canonical form is independent of the generator order
      std::reverse(gu.begin(), gu.end());
      EXPECT_EQ(span(gu, n, f), u);
      EXPECT_EQ(rref(u.basis()), u.basis());
    }
  }
}

TEST(LinalgProperty, KernelIsAnnihilated) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    const auto& f = it % 2 ? F3 : Q;
    std::size_t n = 1 + rng() % 5, r = rng() % 4;
    auto rows = random_vectors(rng, f, n, r);
    auto M = Matrix::from_rows(f, n, rows);
    auto K = solve_membership_system(M);
    EXPECT_EQ(K.dim() + span(rows, n, f).dim(), n);
    for (const auto& k : K.basis_vectors()) EXPECT_TRUE(is_zero_vector(M.apply(k)));
  }
}
