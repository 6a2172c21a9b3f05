#include <gtest/gtest.h>

#include "nassoc/error.hpp"
#include "nassoc/verify.hpp"
#include "test_util.hpp"

using namespace nassoc;
using namespace nassoc::testing;

TEST(Verify, CatalogueNamesRoundTrip) {
  EXPECT_EQ(all_checks().size(), 41u);
  for (CheckId id : all_checks()) {
    EXPECT_EQ(parse_check_id(to_string(id)), id);
    EXPECT_FALSE(describe(id).empty());
  }
  EXPECT_FALSE(parse_check_id("no_such_check").has_value());
}

TEST(Verify, Dt1OnAex) {
  auto r = verify(make_A_ex(F2), CheckId::Dt1AsqCommAssoc);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.witness["Asq"], subspace_to_json(basis_span(make_A_ex(F2), {0})));
}

TEST(Verify, PhiEqAsqOnT3) {
  auto r = verify(make_truncated_polynomial(F2, 3), CheckId::PhiEqAsqNilpotent);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
}

TEST(Verify, NovikovEquivalencesOnAnov) {
  auto r = verify(make_A_nov(F2), CheckId::NovikovEquivalences);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.witness["right_nilpotent"], false);
  EXPECT_EQ(r.witness["Asq_nilpotent"], false);
  EXPECT_EQ(r.witness["solvable"], false);
}

TEST(Verify, Min1OnAexWithZeroRadical) {
  auto r = verify(make_A_ex(F2), CheckId::Min1MinimalIdealSides);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.witness["R"], Json::array());
}

TEST(Verify, CharacteristicGate) {
  for (const auto& name : {"A_ex_F2", "T3", "Z2", "A_ex+Z1"}) {
    auto r = verify(fixture(name), CheckId::AssosymSolvableIsNilpotent);
    EXPECT_FALSE(r.applicable) << name;
    EXPECT_FALSE(r.reason.empty());
  }
}

TEST(Verify, EnumerationOverQIsNotApplicable) {
  auto r = verify(make_A_ex(Q), CheckId::NilpotentMaxSubalgIdeal);
  EXPECT_FALSE(r.applicable);
  auto m = verify(make_A_ex(Q), CheckId::Min1MinimalIdealSides);
  EXPECT_FALSE(m.applicable);
  EXPECT_NE(m.reason.find("finite field"), std::string::npos);
  EXPECT_NO_THROW(verify_all(make_A_nov(Q)));
}

TEST(Verify, VerifyAllOrderAndSoundnessOnExamples) {
  for (const auto& A : {make_truncated_polynomial(F2, 3), make_A_ex(F2)}) {
    auto rs = verify_all(A);
    ASSERT_EQ(rs.size(), all_checks().size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      EXPECT_EQ(rs[i].check, all_checks()[i]);
      if (rs[i].applicable) EXPECT_TRUE(rs[i].holds) << to_string(rs[i].check);
    }
  }
}

TEST(Verify, CorruptedAexIsCaught) {
  auto bad = make_A_ex(F2).with_product(1, 0, vec(F2, {0, 1}));  // yx = y
  VerifyOptions o;
  o.assume = Assumptions{{IdentityKind::Bicommutative}, std::nullopt, false};
  std::size_t failures = 0;
  for (const auto& r : verify_all(bad, o))
    if (r.applicable && !r.holds) {
      ++failures;
      EXPECT_TRUE(r.hypotheses_assumed);
      EXPECT_FALSE(r.counterexample.is_null());
      EXPECT_TRUE(r.counterexample.contains("algebra"));
      EXPECT_EQ(algebra_from_json(r.counterexample["algebra"]), bad);
    }
  EXPECT_GT(failures, 0u);
}

TEST(Verify, NotApplicableReportsCarryNoVerdict) {
  auto r = verify(make_A_nov(F2), CheckId::BissDecomposition);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.counterexample.is_null());
}

TEST(Verify, BracketPowerOracleExamples) {
  auto t3 = make_truncated_polynomial(F2, 3);
  EXPECT_TRUE(bracket_power_oracle(t3, 4).is_zero());
  EXPECT_EQ(compute_series(t3, SeriesKind::BracketPower).index, 4u);
  EXPECT_TRUE(bracket_power_oracle(make_zero_algebra(F2, 2), 2).is_zero());
  auto aex = make_A_ex(F2);
  EXPECT_EQ(bracket_power_oracle(aex, 3), basis_span(aex, {0}));
  EXPECT_TRUE(bracket_power_oracle(aex, 1).is_full());
  EXPECT_THROW(bracket_power_oracle(aex, 7), Error);
}

TEST(Verify, Deterministic) {
  auto A = fixture("A_ex+T2");
  auto a = verify_all(A), b = verify_all(A);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].witness.dump(), b[i].witness.dump());
    EXPECT_EQ(a[i].holds, b[i].holds);
  }
}
