#include <gtest/gtest.h>

#include "nassoc/error.hpp"
#include "nassoc/structure.hpp"
#include "test_util.hpp"

using namespace nassoc;
using namespace nassoc::testing;

namespace {

const EnumerationBudget kBudget;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("no error");
}

}  // namespace

TEST(Structure, BissOnAex) {
  auto aex = make_A_ex(F2);
  auto d = decompose_semisimple_bicommutative(aex, kBudget);
  EXPECT_EQ(d.square, basis_span(aex, {0}));
  ASSERT_EQ(d.simples.size(), 1u);
  EXPECT_EQ(d.simples[0], basis_span(aex, {0}));
  EXPECT_EQ(d.complement, basis_span(aex, {1}));
  ASSERT_EQ(d.action_pattern.size(), 1u);
  EXPECT_TRUE(d.action_pattern[0].complement_times_simple_zero);
  EXPECT_FALSE(d.action_pattern[0].simple_times_complement_zero);
}

TEST(Structure, BissOnFxF) {
  auto a = make_FxF(F2);
  auto d = decompose_semisimple_bicommutative(a, kBudget);
  EXPECT_EQ(d.simples, (std::vector<Subspace>{basis_span(a, {0}), basis_span(a, {1})}));
  EXPECT_TRUE(d.complement.is_zero());
}

TEST(Structure, BissRefusals) {
  EXPECT_EQ(kind_of([] { decompose_semisimple_bicommutative(make_truncated_polynomial(F2, 3), kBudget); }),
            ErrorKind::Refused);
  EXPECT_EQ(kind_of([] { decompose_semisimple_bicommutative(make_A_nov(F2), kBudget); }), ErrorKind::Refused);
  EXPECT_EQ(kind_of([] { decompose_semisimple_bicommutative(make_A_ex(Q), kBudget); }), ErrorKind::Unsupported);
}

// Recomposition: simples sum independently to S^2 and U is a complement
// subalgebra with U^2 = 0.
TEST(StructureProperty, BissRecomposes) {
  std::size_t checked = 0;
  for (const auto& f : {F2, F3})
    for (const auto& A : search(f, 2, IdentityKind::Bicommutative)) {
      if (!is_semisimple(A, kBudget)) continue;
      auto d = decompose_semisimple_bicommutative(A, kBudget);
      Subspace sum = A.zero_subspace();
      std::size_t dims = 0;
      for (const auto& S : d.simples) {
        sum = subspace_sum(sum, S);
        dims += S.dim();
        EXPECT_TRUE(is_ideal(A, S));
      }
      EXPECT_EQ(sum, d.square);
      EXPECT_EQ(dims, d.square.dim());
      EXPECT_TRUE(subspace_intersect(d.square, d.complement).is_zero());
      EXPECT_TRUE(subspace_sum(d.square, d.complement).is_full());
      EXPECT_TRUE(square(A, d.complement).is_zero());
      for (std::size_t i = 0; i < d.simples.size(); ++i) {
        EXPECT_EQ(d.action_pattern[i].simple_times_complement_zero,
                  subspace_product(A, d.simples[i], d.complement).is_zero());
        EXPECT_EQ(d.action_pattern[i].complement_times_simple_zero,
                  subspace_product(A, d.complement, d.simples[i]).is_zero());
      }
      ++checked;
    }
  EXPECT_GT(checked, 0u);
}

TEST(Structure, PhiFreeSplit) {
  auto anov = make_A_nov(F2);
  auto s = phi_free_split(anov, kBudget);
  EXPECT_EQ(s.zsoc, basis_span(anov, {0}));
  EXPECT_EQ(s.complement, basis_span(anov, {1}));
  ASSERT_TRUE(s.novikov.has_value());
  EXPECT_TRUE(s.novikov->c_cap_r.is_zero());
  EXPECT_TRUE(s.novikov->annihilated);

  auto z2 = make_zero_algebra(F2, 2);
  auto sz = phi_free_split(z2, kBudget);
  EXPECT_TRUE(sz.zsoc.is_full());
  EXPECT_TRUE(sz.complement.is_zero());

  auto aex = make_A_ex(F2);
  auto sa = phi_free_split(aex, kBudget);
  EXPECT_TRUE(sa.zsoc.is_zero());
  EXPECT_TRUE(sa.complement.is_full());
  ASSERT_TRUE(sa.bicommutative.has_value());
  EXPECT_TRUE(sa.bicommutative->failures.empty());
}

TEST(Structure, PhiFreeSplitRefusesWhenPhiNonzero) {
  EXPECT_EQ(kind_of([] { phi_free_split(make_truncated_polynomial(F2, 3), kBudget); }), ErrorKind::Refused);
}

// Outside the natural classes a nilpotent phi(A) != 0 can coexist with a
// trivial split over Zsoc = 0.
TEST(Structure, SplitCounterexampleOutsideNaturalClasses) {
  {
    const auto& f = F3;
    auto A = table(f, 3, {{0, 0, {0, 1, 0}}, {0, 1, {0, 0, 1}}, {1, 0, {0, 0, 1}}, {2, 2, {0, 1, 0}}});
    EXPECT_TRUE(check_identity(A, IdentityKind::Commutative));
    EXPECT_FALSE(in_natural_class(A));
    auto fr = frattini(A, kBudget);
    EXPECT_EQ(fr.ideal, basis_span(A, {1, 2}));
    EXPECT_TRUE(nilpotency_profile(A, fr.ideal).nilpotent);
    EXPECT_TRUE(zero_socle(A, kBudget).is_zero());
  }
}

TEST(Structure, AssosymmetricReport) {
  auto r = assosymmetric_report(make_truncated_polynomial(F5, 3), kBudget);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.quotient_by_nilradical_associative);
  ASSERT_TRUE(r.nilradical.has_value());
  EXPECT_TRUE(r.nilradical->is_full());
  auto s = assosymmetric_report(make_FxF(F5), kBudget);
  EXPECT_TRUE(s.applicable && s.semisimple);
  EXPECT_EQ(s.semisimple_associative, true);
  EXPECT_TRUE(s.quotient_by_nilradical_associative);
  auto g = assosymmetric_report(make_truncated_polynomial(F2, 3), kBudget);
  EXPECT_FALSE(g.applicable);
  EXPECT_FALSE(g.reason.empty());
  EXPECT_EQ(kind_of([] { assosymmetric_report(make_A_ex(F5), kBudget); }), ErrorKind::Refused);
}

TEST(Structure, NovikovRadicalReport) {
  auto anov = make_A_nov(F2);
  auto r = novikov_radical_report(anov, kBudget);
  EXPECT_TRUE(r.AR.is_zero());
  EXPECT_TRUE(r.AR_nilpotent && r.ARR_in_phi && r.phi_in_Asq);
  auto n1 = make_N1(F2);
  auto m = novikov_radical_report(n1, kBudget);
  EXPECT_TRUE(m.radical.is_full());
  EXPECT_EQ(m.AR, basis_span(n1, {1}));
  EXPECT_TRUE(m.AR_nilpotent);
  EXPECT_TRUE(novikov_radical_report(make_zero_algebra(F3, 2), kBudget).AR.is_zero());
  EXPECT_EQ(kind_of([] { novikov_radical_report(make_A_ex(F2), kBudget); }), ErrorKind::Refused);
}
