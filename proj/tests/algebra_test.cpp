#include <gtest/gtest.h>

#include "nassoc/error.hpp"
#include "test_util.hpp"

using namespace nassoc;
using namespace nassoc::testing;

namespace {

struct AlgebraTest : ::testing::Test {
  Algebra aex = make_A_ex(F2);
  Algebra t3 = make_truncated_polynomial(F2, 3);
  Algebra z2 = make_zero_algebra(F2, 2);
  Algebra anov = make_A_nov(F2);
  Vector x = aex.basis_element(0), y = aex.basis_element(1);
};

}  // namespace

TEST_F(AlgebraTest, Multiply) {
  EXPECT_EQ(multiply(aex, x, y), x);
  EXPECT_EQ(multiply(aex, y, x), aex.zero_element());
  EXPECT_EQ(multiply(aex, x, x), x);
  EXPECT_EQ(multiply(z2, vec(F2, {1, 1}), vec(F2, {1, 0})), z2.zero_element());
  EXPECT_EQ(multiply(t3, t3.basis_element(0), t3.basis_element(1)), t3.basis_element(2));
}

TEST_F(AlgebraTest, Associator) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        EXPECT_TRUE(is_zero_vector(associator(t3, t3.basis_element(i), t3.basis_element(j), t3.basis_element(k))));
  EXPECT_EQ(associator(aex, x, y, y), x);
  EXPECT_TRUE(is_zero_vector(associator(z2, vec(F2, {1, 1}), vec(F2, {1, 0}), vec(F2, {0, 1}))));
}

TEST_F(AlgebraTest, ElementFieldMismatch) {
  EXPECT_THROW(multiply(aex, vec(F3, {1, 0}), y), Error);
  EXPECT_THROW(multiply(aex, vec(F2, {1, 0, 0}), y), Error);
}

TEST_F(AlgebraTest, Identities) {
  EXPECT_TRUE(check_identity(aex, IdentityKind::Bicommutative));
  EXPECT_FALSE(check_identity(aex, IdentityKind::Associative));
  EXPECT_FALSE(check_identity(aex, IdentityKind::Commutative));
  EXPECT_TRUE(check_identity(anov, IdentityKind::NovikovLeft));
  EXPECT_FALSE(check_identity(anov, IdentityKind::Bicommutative));
  for (auto k : kAllIdentityKinds) EXPECT_TRUE(check_identity(z2, k)) << to_string(k);
  for (auto k : kAllIdentityKinds) EXPECT_TRUE(check_identity(t3, k)) << to_string(k);
  for (auto k : kAllIdentityKinds) EXPECT_EQ(parse_identity_kind(to_string(k)), k);
}

TEST_F(AlgebraTest, IdentityWitnessIsGenuine) {
  auto w = identity_witness(anov, IdentityKind::Bicommutative);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(identity_witness(aex, IdentityKind::Bicommutative).has_value());
}

TEST_F(AlgebraTest, SubspaceProduct) {
  EXPECT_EQ(square(aex, aex.whole()), basis_span(aex, {0}));
  auto t3sq = basis_span(t3, {1, 2});
  EXPECT_EQ(square(t3, t3.whole()), t3sq);
  EXPECT_TRUE(square(t3, t3sq).is_zero());
  EXPECT_TRUE(subspace_product(z2, z2.whole(), sp(F2, 2, {{1, 1}})).is_zero());
}

TEST_F(AlgebraTest, SubalgebrasAndIdeals) {
  auto sx = basis_span(aex, {0}), sy = basis_span(aex, {1});
  EXPECT_TRUE(is_ideal(aex, sx));
  EXPECT_TRUE(is_subalgebra(aex, sy));
  EXPECT_FALSE(is_ideal(aex, sy));
  EXPECT_FALSE(is_left_ideal(aex, sy));  // xy = x
  EXPECT_TRUE(is_right_ideal(aex, sy));   // yA = 0
  EXPECT_TRUE(is_ideal(aex, aex.whole()));
  EXPECT_TRUE(is_ideal(aex, aex.zero_subspace()));
}

TEST_F(AlgebraTest, Closures) {
  EXPECT_TRUE(ideal_closure(aex, std::vector<Vector>{y}).is_full());
  EXPECT_EQ(subalgebra_closure(aex, {y}), basis_span(aex, {1}));
  EXPECT_TRUE(ideal_closure(t3, std::vector<Vector>{t3.basis_element(0)}).is_full());
  EXPECT_EQ(subalgebra_closure(t3, {t3.basis_element(1)}), basis_span(t3, {1}));
}

TEST_F(AlgebraTest, Idealizer) {
  EXPECT_TRUE(idealizer(t3, basis_span(t3, {1, 2})).is_full());
  EXPECT_EQ(idealizer(aex, basis_span(aex, {1})), basis_span(aex, {1}));
  EXPECT_TRUE(idealizer(aex, aex.whole()).is_full());
}

TEST_F(AlgebraTest, Annihilator) {
  EXPECT_TRUE(annihilator(z2, z2.whole()).is_full());
  EXPECT_TRUE(annihilator(aex, basis_span(aex, {0})).is_zero());
  EXPECT_TRUE(annihilator(t3, basis_span(t3, {2})).is_full());
  EXPECT_EQ(left_annihilator(aex, aex.whole()), basis_span(aex, {1}));
  EXPECT_EQ(right_annihilator(aex, aex.whole()), sp(F2, 2, {{1, 1}}));  // x(x+y) = 2x
}

TEST_F(AlgebraTest, Quotient) {
  auto q = quotient(aex, basis_span(aex, {0}));
  EXPECT_EQ(q.algebra.dim(), 1u);
  EXPECT_EQ(q.algebra, make_zero_algebra(F2, 1));
  EXPECT_EQ(quotient(aex, aex.whole()).algebra.dim(), 0u);
  auto qt = quotient(t3, basis_span(t3, {2}));
  EXPECT_EQ(qt.algebra, make_truncated_polynomial(F2, 2));
  EXPECT_THROW(quotient(aex, basis_span(aex, {1})), Error);
  EXPECT_EQ(qt.project(qt.lift(vec(F2, {1, 1}))), vec(F2, {1, 1}));
}

TEST_F(AlgebraTest, FittingAndNil) {
  EXPECT_EQ(fitting_component(aex, y, Side::Right), basis_span(aex, {1}));
  EXPECT_EQ(fitting_component(aex, x, Side::Right), basis_span(aex, {1}));
  for (const auto& a : elements(t3)) {
    EXPECT_TRUE(fitting_component(t3, a, Side::Right).is_full());
    EXPECT_TRUE(is_right_nil(t3, a));
    EXPECT_TRUE(is_left_nil(t3, a));
  }
  EXPECT_TRUE(is_right_nil(aex, y));
  EXPECT_FALSE(is_right_nil(aex, x));
}

TEST_F(AlgebraTest, MulOperatorColumns) {
  auto r = mul_operator(aex, x, Side::Right);  // v -> v x
  EXPECT_EQ(r.matrix.column(0), x);
  EXPECT_EQ(r.matrix.column(1), aex.zero_element());
  auto l = mul_operator(aex, x, Side::Left);  // v -> x v
  EXPECT_EQ(l.matrix.column(1), x);
}

TEST_F(AlgebraTest, OppositeAndDirectSum) {
  auto op = opposite(aex);
  EXPECT_EQ(multiply(op, y, x), x);
  EXPECT_EQ(opposite(op), aex);
  auto s = direct_sum(aex, t3);
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_TRUE(check_identity(s, IdentityKind::Bicommutative));
  EXPECT_TRUE(is_ideal(s, basis_span(s, {0, 1})));
  EXPECT_THROW(direct_sum(aex, make_A_ex(F3)), Error);
}

TEST_F(AlgebraTest, Restriction) {
  auto r = restrict_to(t3, basis_span(t3, {1, 2}));
  EXPECT_EQ(r.algebra, make_zero_algebra(F2, 2));
  EXPECT_TRUE(is_subalgebra(aex, sp(F2, 2, {{1, 1}})));
  EXPECT_THROW(restrict_to(t3, basis_span(t3, {0})), Error);
}
