#include <gtest/gtest.h>

#include "nassoc/error.hpp"
#include "test_util.hpp"

using namespace nassoc;
using namespace nassoc::testing;

TEST(Field, RationalAddition) {
  auto a = Scalar::rational(1, 2), b = Scalar::rational(1, 3);
  EXPECT_EQ(scalar_arith(a, b, ArithOp::Add), Scalar::rational(5, 6));
}

TEST(Field, PrimeMultiplication) {
  EXPECT_EQ(scalar_arith(Scalar::from_int(F5, 3), Scalar::from_int(F5, 4), ArithOp::Mul), Scalar::from_int(F5, 2));
}

TEST(Field, RationalCanonical) {
  auto h = Scalar::rational(2, 4);
  EXPECT_EQ(h.str(), "1/2");
  EXPECT_EQ(h, Scalar::rational(1, 2));
  EXPECT_EQ(Scalar::rational(3, -6).str(), "-1/2");
}

TEST(Field, Characteristic) {
  EXPECT_EQ(field_characteristic(Q), 0u);
  EXPECT_EQ(field_characteristic(F5), 5u);
  EXPECT_EQ(field_characteristic(F2), 2u);
}

TEST(Field, DivisionByZeroIsDomainError) {
  try {
    scalar_arith(Scalar::from_int(F3, 1), Scalar::zero(F3), ArithOp::Div);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
  EXPECT_THROW(Scalar::zero(Q).inverse(), Error);
}

TEST(Field, MixedFieldsRejected) {
  EXPECT_THROW(Scalar::from_int(F2, 1) + Scalar::from_int(F3, 1), Error);
  EXPECT_THROW(Scalar::from_int(Q, 1) + Scalar::from_int(F3, 1), Error);
}

TEST(Field, NonPrimeRejected) {
  EXPECT_THROW(FieldSpec::prime(4), Error);
  EXPECT_THROW(FieldSpec::prime(1), Error);
}

TEST(Field, ParseAndRender) {
  EXPECT_EQ(Scalar::parse(Q, "-6/4").str(), "-3/2");
  EXPECT_EQ(Scalar::parse(F5, "7"), Scalar::from_int(F5, 2));
  EXPECT_EQ(Scalar::parse(F5, "-1"), Scalar::from_int(F5, 4));
  EXPECT_THROW(Scalar::parse(Q, "1/0"), Error);
  EXPECT_THROW(Scalar::parse(Q, "abc"), Error);
}

// Field axioms on all of F_7 and a grid of rationals.
TEST(FieldProperty, AxiomsHold) {
  auto f7 = FieldSpec::prime(7);
  std::vector<Scalar> xs;
  for (long i = 0; i < 7; ++i) xs.push_back(Scalar::from_int(f7, i));
  auto check = [](const std::vector<Scalar>& s) {
    for (const auto& a : s)
      for (const auto& b : s) {
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        for (const auto& c : s) EXPECT_EQ(a * (b + c), a * b + a * c);
      }
  };
  check(xs);
  std::vector<Scalar> qs;
  for (long n = -3; n <= 3; ++n)
    for (long d = 1; d <= 3; ++d) qs.push_back(Scalar::rational(n, d));
  check(qs);
}
