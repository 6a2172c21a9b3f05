#include <gtest/gtest.h>

#include <set>

#include "nassoc/error.hpp"
#include "test_util.hpp"

using namespace nassoc;
using namespace nassoc::testing;

namespace {

const EnumerationBudget kBudget;

std::set<Subspace> as_set(const std::vector<Subspace>& v) { return {v.begin(), v.end()}; }

// Gaussian binomial sum: number of subspaces of F_q^n.
std::uint64_t lattice_size(std::uint64_t q, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t qn = 1, qk = 1;
      for (std::size_t j = 0; j < n - i; ++j) qn *= q;
      for (std::size_t j = 0; j < i + 1; ++j) qk *= q;
      num *= qn - 1;
      den *= qk - 1;
    }
    total += num / den;
  }
  return total;
}

}  // namespace

TEST(Enumerate, VectorCounts) {
  std::size_t all = 0, proj = 0;
  for_each_vector(F3, 3, kBudget, [&](const Vector&) { ++all; });
  for_each_projective_vector(F3, 3, kBudget, [&](const Vector& v) {
    ++proj;
    for (const auto& c : v)
      if (!c.is_zero()) {
        EXPECT_TRUE(c.is_one());
        break;
      }
  });
  EXPECT_EQ(all, 27u);
  EXPECT_EQ(proj, 13u);
}

TEST(Enumerate, SubspaceLatticeIsCompleteAndCanonical) {
  for (auto [f, n] : std::vector<std::pair<FieldSpec, std::size_t>>{{F2, 4}, {F3, 3}, {F5, 2}}) {
    auto all = all_subspaces(f, n, kBudget);
    EXPECT_EQ(all.size(), lattice_size(f.order(), n));
    EXPECT_EQ(as_set(all).size(), all.size());
    EXPECT_EQ(subspace_count(f.order(), n, 1u << 30), all.size());
  }
}

TEST(Enumerate, BudgetAndFieldErrors) {
  EnumerationBudget tiny{10, 10};
  try {
    for_each_vector(F2, 5, tiny, [](const Vector&) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
  try {
    minimal_ideals(make_A_ex(Q), kBudget);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
    EXPECT_NE(std::string(e.what()).find("requires a finite field"), std::string::npos);
  }
}

TEST(Enumerate, MinimalIdeals) {
  auto aex = make_A_ex(F2);
  EXPECT_EQ(minimal_ideals(aex, kBudget), std::vector<Subspace>{basis_span(aex, {0})});
  auto z2 = make_zero_algebra(F2, 2);
  EXPECT_EQ(minimal_ideals(z2, kBudget).size(), 3u);
  auto t3 = make_truncated_polynomial(F2, 3);
  EXPECT_EQ(minimal_ideals(t3, kBudget), std::vector<Subspace>{basis_span(t3, {2})});
}

TEST(Enumerate, Socles) {
  auto aex = make_A_ex(F2);
  EXPECT_EQ(socle(aex, kBudget), basis_span(aex, {0}));
  EXPECT_TRUE(zero_socle(aex, kBudget).is_zero());
  auto z2 = make_zero_algebra(F2, 2);
  EXPECT_TRUE(socle(z2, kBudget).is_full());
  EXPECT_TRUE(zero_socle(z2, kBudget).is_full());
  auto t3 = make_truncated_polynomial(F2, 3);
  EXPECT_EQ(socle(t3, kBudget), basis_span(t3, {2}));
  EXPECT_EQ(zero_socle(t3, kBudget), basis_span(t3, {2}));
}

TEST(Enumerate, MaximalSubalgebras) {
  auto aex = make_A_ex(F2);
  EXPECT_EQ(as_set(maximal_subalgebras(aex, kBudget)),
            (std::set<Subspace>{basis_span(aex, {0}), basis_span(aex, {1}), sp(F2, 2, {{1, 1}})}));
  auto t3 = make_truncated_polynomial(F2, 3);
  EXPECT_EQ(maximal_subalgebras(t3, kBudget), std::vector<Subspace>{basis_span(t3, {1, 2})});
  EXPECT_EQ(maximal_subalgebras(make_zero_algebra(F2, 2), kBudget).size(), 3u);
}

TEST(Enumerate, Frattini) {
  auto t3 = make_truncated_polynomial(F2, 3);
  auto ft = frattini(t3, kBudget);
  EXPECT_EQ(ft.subalgebra, basis_span(t3, {1, 2}));
  EXPECT_EQ(ft.ideal, basis_span(t3, {1, 2}));
  auto fa = frattini(make_A_ex(F2), kBudget);
  EXPECT_TRUE(fa.subalgebra.is_zero() && fa.ideal.is_zero());
  auto fz = frattini(make_zero_algebra(F2, 2), kBudget);
  EXPECT_TRUE(fz.subalgebra.is_zero() && fz.ideal.is_zero());
  auto f0 = frattini(make_zero_algebra(F2, 0), kBudget);
  EXPECT_TRUE(f0.subalgebra.is_full());
}

TEST(Enumerate, IdealCore) {
  auto aex = make_A_ex(F2);
  EXPECT_TRUE(ideal_core(aex, basis_span(aex, {1})).is_zero());
  EXPECT_EQ(ideal_core(aex, basis_span(aex, {0})), basis_span(aex, {0}));
  EXPECT_TRUE(ideal_core(aex, aex.whole()).is_full());
}

TEST(Enumerate, Radicals) {
  auto aex = make_A_ex(F2);
  EXPECT_TRUE(radical(aex, RadicalKind::Solvable, kBudget).is_zero());
  EXPECT_TRUE(radical(make_A_ex(F3), RadicalKind::Solvable, kBudget).is_zero());
  auto t3 = make_truncated_polynomial(F2, 3);
  EXPECT_TRUE(radical(t3, RadicalKind::Nilpotent, kBudget).is_full());
  auto anov = make_A_nov(F2);
  EXPECT_EQ(radical(anov, RadicalKind::Solvable, kBudget), basis_span(anov, {0}));
  EXPECT_EQ(radical(anov, RadicalKind::RightNil, kBudget), basis_span(anov, {0}));
  EXPECT_TRUE(is_semisimple(aex, kBudget));
  EXPECT_FALSE(is_semisimple(t3, kBudget));
  EXPECT_TRUE(is_semisimple(make_FxF(F2), kBudget));
}

TEST(Enumerate, NilRadicalRefusedOutsideNaturalClasses) {
  auto odd = table(F3, 3, {{0, 0, {0, 1, 0}}, {0, 1, {0, 0, 1}}, {1, 0, {0, 0, 1}}, {2, 2, {0, 1, 0}}});
  try {
    radical(odd, RadicalKind::Nilpotent, kBudget);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Refused);
  }
  EXPECT_NO_THROW(radical(odd, RadicalKind::Solvable, kBudget));
}

TEST(Enumerate, Complements) {
  auto v = Subspace::full(F2, 2);
  std::vector<Subspace> seen;
  for_each_complement(v, sp(F2, 2, {{1, 0}}), kBudget, [&](const Subspace& c) {
    seen.push_back(c);
    return true;
  });
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen[0], sp(F2, 2, {{0, 1}}));
  EXPECT_EQ(seen[1], sp(F2, 2, {{1, 1}}));
}

// Structural invariants over random algebras from F_2 and F_3.
TEST(EnumerateProperty, StructuralInvariants) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 120; ++it) {
    const auto& f = it % 2 ? F3 : F2;
    auto A = random_algebra(rng, f, 1 + rng() % 3, 0.3);
    auto ideals = all_ideals(A, kBudget);
    auto mins = minimal_ideals(A, kBudget);
    for (std::size_t i = 0; i < mins.size(); ++i) {
      EXPECT_TRUE(is_ideal(A, mins[i]));
      EXPECT_FALSE(mins[i].is_zero());
      for (const auto& J : ideals)
        if (!J.is_zero() && J != mins[i]) EXPECT_FALSE(contains(mins[i], J));
      for (std::size_t j = 0; j < mins.size(); ++j)
        if (i != j) EXPECT_FALSE(contains(mins[i], mins[j]));
    }
    auto fr = frattini(A, kBudget);
    EXPECT_TRUE(contains(fr.subalgebra, fr.ideal));
    EXPECT_TRUE(is_ideal(A, fr.ideal));
    auto R = radical(A, RadicalKind::Solvable, kBudget, false);
    EXPECT_TRUE(is_ideal(A, R));
    EXPECT_TRUE(nilpotency_profile(A, R).solvable);
    EXPECT_TRUE(is_semisimple(quotient(A, R).algebra, kBudget));
    for (const auto& I : ideals)
      if (nilpotency_profile(A, I).solvable) EXPECT_TRUE(contains(R, I));
    if (in_natural_class(A)) {
      auto N = radical(A, RadicalKind::Nilpotent, kBudget);
      auto Nr = radical(A, RadicalKind::RightNil, kBudget);
      auto Nl = radical(A, RadicalKind::LeftNil, kBudget);
      EXPECT_TRUE(contains(subspace_intersect(Nr, Nl), N));
      EXPECT_TRUE(contains(R, Nr) && contains(R, Nl));
    }
    EXPECT_TRUE(contains(square(A, A.whole()), fr.subalgebra));
    if (nilpotency_profile(A).nilpotent)
      for (const auto& M : maximal_subalgebras(A, kBudget)) EXPECT_TRUE(is_ideal(A, M));
    for (int k = 0; k < 4; ++k) {
      std::vector<Vector> g{elements(A)[rng() % elements(A).size()]};
      auto S = span(g, A.dim(), f), T = subspace_sum(S, span({elements(A)[rng() % elements(A).size()]}, A.dim(), f));
      auto cs = ideal_core(A, S), ct = ideal_core(A, T);
      EXPECT_EQ(ideal_core(A, cs), cs);
      EXPECT_TRUE(contains(ct, cs));
    }
  }
}
