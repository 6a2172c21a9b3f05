#include "nassoc/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "nassoc/series.hpp"
#include "nassoc/structure.hpp"

namespace nassoc {

namespace {

struct CheckInfo {
  CheckId id;
  const char* name;
  const char* statement;
};

const std::array<CheckInfo, 41> kCatalogue{{
    {CheckId::NaturalProductBicommutative, "natural_product_bicommutative",
     "bicommutative: the product of two ideals is an ideal"},
    {CheckId::NaturalProductAssosymmetric, "natural_product_assosymmetric",
     "assosymmetric: the product of two ideals is an ideal"},
    {CheckId::NaturalProductNovikov, "natural_product_novikov",
     "Novikov: products of ideals, all series terms and annihilators of ideals are ideals"},
    {CheckId::NilpotentMaxSubalgIdeal, "nilpotent_max_subalg_ideal",
     "nilpotent: every proper subalgebra is properly inside its idealiser; maximal subalgebras are ideals"},
    {CheckId::PhiEqAsqNilpotent, "phi_eq_Asq_nilpotent", "nilpotent: phi(A) = F(A) = A^2"},
    {CheckId::WeaklyNilpotentImpliesNilpotent, "weakly_nilpotent_implies_nilpotent",
     "natural class: weakly nilpotent subalgebras are nilpotent; chief factors of nilpotent A are 1-dimensional"},
    {CheckId::ChiefFactorAnnihilated, "chief_factor_annihilated",
     "natural class: BN is in C for right nilpotent ideals N and NB is in C for left nilpotent ones, for every "
     "chief factor B/C"},
    {CheckId::Dt1AsqCommAssoc, "dt1_Asq_comm_assoc", "bicommutative: A^2 is commutative and associative"},
    {CheckId::SolvableBicommAsqNilpotent, "solvable_bicomm_Asq_nilpotent",
     "bicommutative and solvable (or one-sided nilpotent): A^2 is nilpotent and A is solvable"},
    {CheckId::ArRaNilpotentBicomm, "AR_RA_nilpotent_bicomm",
     "bicommutative: AR and RA are nilpotent ideals (R the solvable radical)"},
    {CheckId::FittingSubalgebra, "fitting_subalgebra",
     "right (left) commutative: every right (left) Fitting null component is a subalgebra"},
    {CheckId::FactorActsNilpotently, "factor_acts_nilpotently",
     "right (left) commutative: if B is a left (right) subideal, C an ideal of B inside phi(A) and B/C right "
     "(left) nilpotent, then every element of B acts right (left) nilpotently on A"},
    {CheckId::PhiRightNil, "phi_right_nil", "right (left) commutative: phi(A) is right (left) nil"},
    {CheckId::PhiNilpotentBicomm, "phi_nilpotent_bicomm", "bicommutative: phi(A) is nilpotent and inside A^2"},
    {CheckId::Min1MinimalIdealSides, "min1_minimal_ideal_sides",
     "bicommutative: each minimal ideal B has RB = BR^2 = 0 or BR = R^2B = 0"},
    {CheckId::BimaxRightNilpotent, "bimax_right_nilpotent",
     "bicommutative and right (left) nilpotent: maximal subalgebras are left (right) ideals and A^3 (^3A) is "
     "inside phi(A)"},
    {CheckId::BiannSubalgebras, "biann_subalgebras",
     "bicommutative: idealisers and annihilators of subalgebras are subalgebras; annihilators of ideals are "
     "ideals"},
    {CheckId::MinimalIdealZeroOrSimple, "minimal_ideal_zero_or_simple",
     "bicommutative: a minimal ideal B has B^2 = 0 or is a simple algebra"},
    {CheckId::SsIdealsInAsq, "ss_ideals_in_Asq",
     "semisimple bicommutative: every ideal inside S^2 is a direct sum of simple minimal ideals"},
    {CheckId::BissDecomposition, "biss_decomposition",
     "semisimple bicommutative: S = S^2 (+) U with S^2 a direct sum of simple ideals S_i, U^2 = 0 and S_iU = 0 "
     "or US_i = 0"},
    {CheckId::KleinfeldSemisimpleAssociative, "kleinfeld_semisimple_associative",
     "assosymmetric, characteristic not 2 or 3, semisimple or without nonzero zero ideals: associative"},
    {CheckId::AssosymSolvableIsNilpotent, "assosym_solvable_is_nilpotent",
     "assosymmetric, characteristic not 2 or 3, solvable: nilpotent"},
    {CheckId::AssosymQuotientAssociative, "assosym_quotient_associative",
     "assosymmetric, characteristic not 2 or 3: N(A) = R(A) and A/N(A) is associative"},
    {CheckId::AssosymPhiNilpotent, "assosym_phi_nilpotent",
     "assosymmetric, characteristic not 2 or 3: phi(A) is nilpotent and inside N(A)"},
    {CheckId::NovikovEquivalences, "novikov_equivalences",
     "Novikov: right nilpotent, A^2 nilpotent and solvable are equivalent"},
    {CheckId::LeftNilpotentNovikovNilpotent, "left_nilpotent_novikov_nilpotent",
     "Novikov and left nilpotent: nilpotent"},
    {CheckId::NovikovSolvablePhiNilpotent, "novikov_solvable_phi_nilpotent",
     "solvable Novikov: phi(A) is nilpotent and inside A^2"},
    {CheckId::NovarArNilpotent, "novar_AR_nilpotent", "Novikov: AR is a nilpotent ideal"},
    {CheckId::NovikovAnnSubalgebras, "novikov_ann_subalgebras",
     "Novikov: idealisers and annihilators of subalgebras are subalgebras; annihilators of ideals are ideals"},
    {CheckId::SplitIffPhiFree, "split_iff_phi_free",
     "natural class and phi(A) nilpotent (guaranteed for bicommutative, assosymmetric outside characteristic 2, 3, and solvable "
     "Novikov): phi-free iff A splits over Zsoc(A)"},
    {CheckId::TSocleEqualities, "t_socle_equalities",
     "phi-free bicommutative, assosymmetric or Novikov: Zsoc(A) = N(A) = Ann(Soc(A))"},
    {CheckId::BiphifreeStructure, "biphifree_structure",
     "bicommutative: phi-free iff A = Zsoc (+) (D + E) with D^2 = 0, R = Zsoc (+) D, E split as a semisimple "
     "algebra and Zsoc = Z1 + Z2 with Z1 R = 0, R Z2 = 0"},
    {CheckId::PhifreeNovikov, "phifree_novikov",
     "phi-free Novikov: A = Zsoc (+) C with C a subalgebra and A(C meet R) = 0"},
    {CheckId::ArrInclusions, "arr_inclusions", "Novikov: (AR)R is inside phi(A), which is inside A^2"},
    {CheckId::Char0NovikovSplit, "char0_novikov_split",
     "Novikov, characteristic 0, R nilpotent: phi-free iff A = R (+) S with R a zero algebra and S semisimple "
     "commutative associative"},
    {CheckId::Char0RadZeroAlgebra, "char0_rad_zero_algebra",
     "Novikov, characteristic 0, R nilpotent: phi-free iff R is a zero algebra"},
    {CheckId::Char0PhiInRsq, "char0_phi_in_Rsq", "Novikov, characteristic 0: phi(A) is inside R^2 and nilpotent"},
    {CheckId::Char0PhiEqRsq, "char0_phi_eq_Rsq", "Novikov, characteristic 0, R nilpotent: phi(A) = R^2"},
    {CheckId::A3NovikovIffBicomm, "a3_novikov_iff_bicomm", "A^3 = 0: Novikov iff bicommutative"},
    {CheckId::NovmaxImplications, "novmax_implications",
     "Novikov: right nilpotent implies A^3 inside phi(A), which implies all maximal subalgebras are left ideals"},
    {CheckId::SolvableBicommA3IffLeftIdeals, "solvable_bicomm_A3_iff_left_ideals",
     "solvable bicommutative: A^3 inside phi(A) iff all maximal subalgebras are left ideals"},
}};

const CheckInfo& info(CheckId id) { return kCatalogue[static_cast<std::size_t>(id)]; }

const char* kFinite = "requires finite field";

using IK = IdentityKind;

// Right and left commutativity are the building blocks; this closes a set of
// assumed identities under the implications between the listed classes.
std::set<IK> close_identities(const std::vector<IK>& given) {
  std::set<IK> s(given.begin(), given.end());
  auto add_parts = [&](IK k) {
    switch (k) {
      case IK::Bicommutative: s.insert({IK::RightCommutative, IK::LeftCommutative}); break;
      case IK::Assosymmetric: s.insert({IK::LeftSymmetric, IK::RightSymmetric}); break;
      case IK::NovikovLeft: s.insert({IK::LeftSymmetric, IK::RightCommutative}); break;
      case IK::NovikovRight: s.insert({IK::RightSymmetric, IK::LeftCommutative}); break;
      case IK::Associative: s.insert({IK::LeftSymmetric, IK::RightSymmetric}); break;
      default: break;
    }
  };
  for (IK k : given) add_parts(k);
  if (s.count(IK::Associative) && s.count(IK::Commutative)) s.insert(kAllIdentityKinds.begin(), kAllIdentityKinds.end());
  auto both = [&](IK a, IK b) { return s.count(a) && s.count(b); };
  if (both(IK::RightCommutative, IK::LeftCommutative)) s.insert(IK::Bicommutative);
  if (both(IK::LeftSymmetric, IK::RightSymmetric)) s.insert(IK::Assosymmetric);
  if (both(IK::LeftSymmetric, IK::RightCommutative)) s.insert(IK::NovikovLeft);
  if (both(IK::RightSymmetric, IK::LeftCommutative)) s.insert(IK::NovikovRight);
  return s;
}

// Products are taken in A whether or not U is closed, so corrupted tables
// still get an answer.
bool chain_vanishes(const Algebra& A, const Subspace& U, SeriesKind kind) {
  const std::size_t limit = A.dim() + 2;
  if (U.is_zero()) return true;
  if (kind == SeriesKind::BracketPower) {
    std::vector<Subspace> t{U};
    for (std::size_t n = 2; n <= limit; ++n) {
      Subspace next = A.zero_subspace();
      for (std::size_t i = 1; i < n; ++i) next = subspace_sum(next, subspace_product(A, t[i - 1], t[n - i - 1]));
      if (next.is_zero()) return true;
      t.push_back(std::move(next));
    }
    return false;
  }
  Subspace t = U;
  for (std::size_t step = 0; step < limit; ++step) {
    Subspace next = kind == SeriesKind::RightPower  ? subspace_product(A, t, U)
                    : kind == SeriesKind::LeftPower ? subspace_product(A, U, t)
                                                    : square(A, t);
    if (next.is_zero()) return true;
    t = std::move(next);
  }
  return false;
}

bool nilpotent_subspace(const Algebra& A, const Subspace& U) {
  return chain_vanishes(A, U, SeriesKind::BracketPower);
}

class Analysis {
 public:
  Analysis(const Algebra& A, const VerifyOptions& opt) : A(A), opt(opt) {
    if (opt.assume) assumed_ = close_identities(opt.assume->identities);
  }

  const Algebra& A;
  const VerifyOptions& opt;

  bool in(IK k) {
    if (opt.assume) return assumed_.count(k) > 0;
    auto it = identity_.find(k);
    if (it == identity_.end()) it = identity_.emplace(k, check_identity(A, k)).first;
    return it->second;
  }
  bool natural() { return in(IK::Bicommutative) || in(IK::Assosymmetric) || in(IK::NovikovLeft) || in(IK::NovikovRight); }
  bool finite() const { return A.field().is_finite(); }
  std::uint32_t ch() const { return A.field().characteristic(); }
  bool char_not_2_3() const { return ch() != 2 && ch() != 3; }

  const NilpotencyProfile& profile() {
    return get(profile_, [&] {
      auto p = nilpotency_profile(A);
      if (opt.assume && opt.assume->nilpotent)
        p.solvable = p.right_nilpotent = p.left_nilpotent = p.weakly_nilpotent = p.nilpotent = true;
      return p;
    });
  }
  const Subspace& sq() { return get(sq_, [&] { return square(A, A.whole()); }); }
  const std::vector<Subspace>& ideals() { return get(ideals_, [&] { return all_ideals(A, opt.budget); }); }
  const std::vector<Subspace>& subalgebras() {
    return get(subalgebras_, [&] { return all_subalgebras(A, opt.budget); });
  }
  const std::vector<Subspace>& minimal() { return get(minimal_, [&] { return minimal_ideals(A, opt.budget); }); }
  const std::vector<Subspace>& maximal() {
    return get(maximal_, [&] { return maximal_subalgebras(A, opt.budget); });
  }
  const FrattiniResult& frattini() { return get(frattini_, [&] { return frattini_from(A, maximal()); }); }
  const Subspace& phi() { return frattini().ideal; }
  const Subspace& R() {
    return get(radical_, [&] {
      if (opt.assume && opt.assume->radical) return *opt.assume->radical;
      if (opt.certified_radical) return *opt.certified_radical;
      return radical(A, RadicalKind::Solvable, opt.budget);
    });
  }
  const Subspace& N() {
    return get(nilradical_, [&] { return radical(A, RadicalKind::Nilpotent, opt.budget, false); });
  }
  const Subspace& soc() { return get(soc_, [&] { return sum_of(minimal(), false); }); }
  const Subspace& zsoc() { return get(zsoc_, [&] { return sum_of(minimal(), true); }); }
  bool semisimple() { return R().is_zero(); }

 private:
  std::set<IK> assumed_;
  std::map<IK, bool> identity_;
  std::optional<NilpotencyProfile> profile_;
  std::optional<Subspace> sq_, radical_, nilradical_, soc_, zsoc_;
  std::optional<std::vector<Subspace>> ideals_, subalgebras_, minimal_, maximal_;
  std::optional<FrattiniResult> frattini_;

  template <class T, class F>
  const T& get(std::optional<T>& slot, F&& compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  Subspace sum_of(const std::vector<Subspace>& ms, bool zero_only) {
    Subspace s = A.zero_subspace();
    for (const auto& m : ms)
      if (!zero_only || square(A, m).is_zero()) s = subspace_sum(s, m);
    return s;
  }
};

Json S(const Subspace& U) { return subspace_to_json(U); }
Json V(std::span<const Scalar> v) { return vector_to_json(v); }

// Drops applicability with the first failing hypothesis.
bool require(VerificationReport& r, bool ok, const std::string& reason) {
  if (!ok && r.applicable) {
    r.applicable = false;
    r.reason = reason;
  }
  return ok;
}

std::string not_in(IK k) { return "hypothesis not met: algebra is not " + to_string(k); }

void violated(Analysis& an, VerificationReport& r, const std::string& what, Json data = Json::object()) {
  if (!r.holds) return;
  r.holds = false;
  data["violation"] = what;
  data["algebra"] = algebra_to_json(an.A);
  r.counterexample = std::move(data);
}

void note(VerificationReport& r, const std::string& text) {
  if (std::find(r.notes.begin(), r.notes.end(), text) == r.notes.end()) r.notes.push_back(text);
}

// All elements of U over a finite field; over Q the basis plus seeded random
// small combinations. `visit` returns false to stop.
void for_elements(Analysis& an, VerificationReport& r, const Subspace& U,
                  const std::function<bool(const Vector&)>& visit) {
  if (an.finite()) {
    bool go = true;
    for_each_vector_in(U, an.opt.budget, [&](const Vector& v) {
      if (go) go = visit(v);
    });
    return;
  }
  note(r, "sampled: basis elements plus random small-coefficient combinations (Q)");
  for (std::size_t i = 0; i < U.dim(); ++i)
    if (!visit(U.basis().row_vector(i))) return;
  if (U.dim() < 2) return;
  std::mt19937_64 rng(an.opt.seed);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (std::size_t s = 0; s < an.opt.samples; ++s) {
    Vector c(U.dim());
    for (auto& x : c) x = Scalar::from_int(U.field(), coeff(rng));
    if (!visit(combination(U, c))) return;
  }
}

bool is_simple_algebra_ideal(Analysis& an, const Subspace& B) {
  if (B.is_zero() || square(an.A, B).is_zero()) return false;
  Algebra b = restrict_to(an.A, B).algebra;
  auto mins = minimal_ideals(b, an.opt.budget);
  return mins.size() == 1 && mins.front().is_full();
}

// ---- catalogue ----

void natural_product(Analysis& an, VerificationReport& r, IK kind) {
  if (!require(r, an.in(kind), not_in(kind))) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  const auto& ids = an.ideals();
  for (const auto& I : ids)
    for (const auto& J : ids) {
      Subspace P = subspace_product(A, I, J);
      if (!is_ideal(A, P)) return violated(an, r, "IJ is not an ideal", {{"I", S(I)}, {"J", S(J)}, {"IJ", S(P)}});
    }
  r.witness["ideals"] = ids.size();
  if (kind != IK::NovikovLeft) return;
  for (SeriesKind sk : {SeriesKind::RightPower, SeriesKind::LeftPower, SeriesKind::Derived, SeriesKind::BracketPower}) {
    auto series = compute_series(A, sk);
    for (std::size_t t = 0; t < series.terms.size(); ++t)
      if (!is_ideal(A, series.terms[t]))
        return violated(an, r, "a series term is not an ideal",
                        {{"series", to_string(sk)}, {"position", t + 1}, {"term", S(series.terms[t])}});
  }
  for (const auto& I : ids) {
    Subspace ann = annihilator(A, I);
    if (!is_ideal(A, ann))
      return violated(an, r, "the annihilator of an ideal is not an ideal", {{"I", S(I)}, {"Ann", S(ann)}});
  }
}

void nilpotent_max_subalg_ideal(Analysis& an, VerificationReport& r) {
  if (!require(r, an.profile().nilpotent, "hypothesis not met: algebra is not nilpotent")) return;
  if (!require(r, an.finite(), kFinite)) return;
  for (const auto& B : an.subalgebras()) {
    if (B.is_full()) continue;
    Subspace I = idealizer(an.A, B);
    if (!(I.contains(B) && I.dim() > B.dim()))
      return violated(an, r, "a proper subalgebra equals its idealiser", {{"B", S(B)}, {"idealiser", S(I)}});
  }
  for (const auto& M : an.maximal())
    if (!is_ideal(an.A, M)) return violated(an, r, "a maximal subalgebra is not an ideal", {{"M", S(M)}});
  r.witness["maximal_subalgebras"] = an.maximal().size();
}

void phi_eq_Asq_nilpotent(Analysis& an, VerificationReport& r) {
  if (!require(r, an.profile().nilpotent, "hypothesis not met: algebra is not nilpotent")) return;
  if (!require(r, an.finite(), kFinite)) return;
  const auto& fr = an.frattini();
  r.witness = {{"F", S(fr.subalgebra)}, {"phi", S(fr.ideal)}, {"Asq", S(an.sq())}};
  if (fr.subalgebra != an.sq()) return violated(an, r, "F(A) != A^2", r.witness);
  if (fr.ideal != an.sq()) return violated(an, r, "phi(A) != A^2", r.witness);
}

void weakly_nilpotent_implies_nilpotent(Analysis& an, VerificationReport& r) {
  if (!require(r, an.natural(), "hypothesis not met: algebra is in none of the natural classes")) return;
  const auto& p = an.profile();
  r.witness = {{"weakly_nilpotent", p.weakly_nilpotent}, {"nilpotent", p.nilpotent}};
  if (p.weakly_nilpotent && !p.nilpotent)
    return violated(an, r, "A is weakly nilpotent but not nilpotent",
                    {{"right_index", p.right_index.value_or(0)}, {"left_index", p.left_index.value_or(0)}});
  if (!an.finite()) {
    note(r, "subalgebras and chief factors need enumeration; over Q only A itself was checked");
    return;
  }
  const Algebra& A = an.A;
  for (const auto& B : an.subalgebras()) {
    if (B.is_zero() || B.is_full()) continue;
    bool weak = chain_vanishes(A, B, SeriesKind::RightPower) && chain_vanishes(A, B, SeriesKind::LeftPower);
    if (weak && !nilpotent_subspace(A, B))
      return violated(an, r, "a weakly nilpotent subalgebra is not nilpotent", {{"B", S(B)}});
  }
  if (!p.nilpotent) return;
  auto cs = chief_series(A, A.zero_subspace(), A.whole(), an.opt.budget);
  Json dims = Json::array();
  for (std::size_t i = 1; i < cs.ideals.size(); ++i) {
    const Subspace& lo = cs.ideals[i - 1];
    const Subspace& hi = cs.ideals[i];
    dims.push_back(hi.dim() - lo.dim());
    if (hi.dim() != lo.dim() + 1)
      return violated(an, r, "a chief factor of a nilpotent algebra has dimension != 1",
                      {{"B", S(hi)}, {"C", S(lo)}});
    Subspace act = subspace_sum(subspace_product(A, A.whole(), hi), subspace_product(A, hi, A.whole()));
    if (!lo.contains(act))
      return violated(an, r, "A A_(i) + A_(i) A is not inside A_(i-1) along the chief series",
                      {{"A_i", S(hi)}, {"A_i_minus_1", S(lo)}});
  }
  r.witness["chief_factor_dims"] = dims;
}

void chief_factor_annihilated(Analysis& an, VerificationReport& r) {
  if (!require(r, an.natural(), "hypothesis not met: algebra is in none of the natural classes")) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  const auto& ids = an.ideals();
  std::vector<const Subspace*> right, left;
  for (const auto& N : ids) {
    if (chain_vanishes(A, N, SeriesKind::RightPower)) right.push_back(&N);
    if (chain_vanishes(A, N, SeriesKind::LeftPower)) left.push_back(&N);
  }
  std::size_t factors = 0;
  for (const auto& C : ids) {
    std::vector<const Subspace*> above;
    for (const auto& B : ids)
      if (B.dim() > C.dim() && B.contains(C)) above.push_back(&B);
    for (const Subspace* B : above) {
      bool cover = true;
      for (const Subspace* K : above)
        if (K->dim() < B->dim() && B->contains(*K)) {
          cover = false;
          break;
        }
      if (!cover) continue;
      ++factors;
      for (const Subspace* N : right)
        if (!C.contains(subspace_product(A, *B, *N)))
          return violated(an, r, "BN is not inside C for a right nilpotent ideal N",
                          {{"B", S(*B)}, {"C", S(C)}, {"N", S(*N)}});
      for (const Subspace* N : left)
        if (!C.contains(subspace_product(A, *N, *B)))
          return violated(an, r, "NB is not inside C for a left nilpotent ideal N",
                          {{"B", S(*B)}, {"C", S(C)}, {"N", S(*N)}});
    }
  }
  r.witness = {{"chief_factors", factors}, {"right_nilpotent_ideals", right.size()},
               {"left_nilpotent_ideals", left.size()}};
}

void dt1(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  const Algebra& A = an.A;
  auto u = an.sq().basis_vectors();
  r.witness["Asq"] = S(an.sq());
  for (const auto& x : u)
    for (const auto& y : u) {
      if (multiply(A, x, y) != multiply(A, y, x))
        return violated(an, r, "A^2 is not commutative", {{"x", V(x)}, {"y", V(y)}});
      for (const auto& z : u)
        if (!is_zero_vector(associator(A, x, y, z)))
          return violated(an, r, "A^2 is not associative", {{"x", V(x)}, {"y", V(y)}, {"z", V(z)}});
    }
}

void solvable_bicomm_Asq_nilpotent(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  const auto& p = an.profile();
  if (!require(r, p.solvable || p.right_nilpotent || p.left_nilpotent,
               "hypothesis not met: algebra is neither solvable nor right or left nilpotent"))
    return;
  bool asq = nilpotent_subspace(an.A, an.sq());
  r.witness = {{"Asq_nilpotent", asq}, {"solvable", p.solvable}};
  if (!asq) return violated(an, r, "A^2 is not nilpotent", {{"Asq", S(an.sq())}});
  if (!p.solvable) violated(an, r, "A is one-sided nilpotent but not solvable");
}

void ar_ra(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  Subspace AR = subspace_product(A, A.whole(), an.R()), RA = subspace_product(A, an.R(), A.whole());
  r.witness = {{"R", S(an.R())}, {"AR", S(AR)}, {"RA", S(RA)}};
  for (const auto& [name, U] : {std::pair<const char*, const Subspace&>{"AR", AR}, {"RA", RA}}) {
    if (!is_ideal(A, U)) return violated(an, r, std::string(name) + " is not an ideal", r.witness);
    if (!nilpotent_subspace(A, U)) return violated(an, r, std::string(name) + " is not nilpotent", r.witness);
  }
}

void fitting_subalgebra(Analysis& an, VerificationReport& r) {
  bool rc = an.in(IK::RightCommutative), lc = an.in(IK::LeftCommutative);
  if (!require(r, rc || lc, "hypothesis not met: algebra is neither right nor left commutative")) return;
  std::size_t checked = 0;
  for_elements(an, r, an.A.whole(), [&](const Vector& a) {
    ++checked;
    for (Side side : {Side::Right, Side::Left}) {
      if (side == Side::Right ? !rc : !lc) continue;
      Subspace E = fitting_component(an.A, a, side);
      if (!is_subalgebra(an.A, E)) {
        violated(an, r, "a Fitting null component is not a subalgebra",
                 {{"a", V(a)}, {"side", side == Side::Right ? "right" : "left"}, {"E", S(E)}});
        return false;
      }
    }
    return true;
  });
  r.witness["elements_checked"] = checked;
}

void factor_acts_nilpotently(Analysis& an, VerificationReport& r) {
  bool rc = an.in(IK::RightCommutative), lc = an.in(IK::LeftCommutative);
  if (!require(r, rc || lc, "hypothesis not met: algebra is neither right nor left commutative")) return;
  if (!require(r, an.finite(), kFinite)) return;
  note(r, "subideals restricted to subalgebras that are one-sided ideals of A (this includes every chief series term); C ranges over 0 and phi(A) meet B");
  const Algebra& A = an.A;
  const Subspace& phi = an.phi();
  std::size_t premises = 0;
  for (Side side : {Side::Right, Side::Left}) {
    if (side == Side::Right ? !rc : !lc) continue;
    for (const auto& B : an.subalgebras()) {
      if (B.is_zero()) continue;
      if (side == Side::Right ? !is_left_ideal(A, B) : !is_right_ideal(A, B)) continue;
      std::vector<Subspace> cs{A.zero_subspace()};
      Subspace pc = subspace_intersect(phi, B);
      if (!pc.is_zero()) cs.push_back(pc);
      for (const auto& C : cs) {
        if (!C.contains(subspace_sum(subspace_product(A, B, C), subspace_product(A, C, B)))) continue;
        // B/C one-sided nilpotent: the chain T <- T B + C (or B T + C) falls into C.
        Subspace T = B;
        bool nil = false;
        for (std::size_t step = 0; step <= A.dim() + 1 && !nil; ++step) {
          T = subspace_sum(side == Side::Right ? subspace_product(A, T, B) : subspace_product(A, B, T), C);
          nil = C.contains(T);
        }
        if (!nil) continue;
        ++premises;
        bool ok = true;
        for_each_vector_in(B, an.opt.budget, [&](const Vector& b) {
          if (!ok || acts_nilpotently(A, b, side)) return;
          ok = false;
          violated(an, r, "an element of B does not act nilpotently on A",
                   {{"B", S(B)}, {"C", S(C)}, {"b", V(b)}, {"side", side == Side::Right ? "right" : "left"}});
        });
        if (!ok) return;
      }
    }
  }
  r.witness["premises_met"] = premises;
}

// phi(A) when it can be certified: by enumeration over F_p, or as A^2 for
// nilpotent A over Q.
std::optional<Subspace> certified_phi(Analysis& an, VerificationReport& r) {
  if (an.finite()) return an.phi();
  if (an.profile().nilpotent) {
    note(r, "phi(A) taken as A^2, which holds for nilpotent algebras");
    return an.sq();
  }
  return std::nullopt;
}

void phi_right_nil(Analysis& an, VerificationReport& r) {
  bool rc = an.in(IK::RightCommutative), lc = an.in(IK::LeftCommutative);
  if (!require(r, rc || lc, "hypothesis not met: algebra is neither right nor left commutative")) return;
  auto phi = certified_phi(an, r);
  if (!require(r, phi.has_value(), "requires finite field (phi(A) over Q is only known for nilpotent algebras)"))
    return;
  r.witness["phi"] = S(*phi);
  for_elements(an, r, *phi, [&](const Vector& a) {
    if (rc && !is_right_nil(an.A, a)) {
      violated(an, r, "an element of phi(A) is not right nil", {{"a", V(a)}});
      return false;
    }
    if (lc && !is_left_nil(an.A, a)) {
      violated(an, r, "an element of phi(A) is not left nil", {{"a", V(a)}});
      return false;
    }
    return true;
  });
}

void phi_nilpotent_in_asq(Analysis& an, VerificationReport& r) {
  const Subspace& phi = an.phi();
  r.witness["phi"] = S(phi);
  if (!nilpotent_subspace(an.A, phi)) return violated(an, r, "phi(A) is not nilpotent", {{"phi", S(phi)}});
  if (!an.sq().contains(phi))
    return violated(an, r, "phi(A) is not inside A^2", {{"phi", S(phi)}, {"Asq", S(an.sq())}});
}

void phi_nilpotent_bicomm(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.finite(), kFinite)) return;
  phi_nilpotent_in_asq(an, r);
}

void min1(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  const Subspace& R = an.R();
  Subspace R2 = square(A, R);
  Json sides = Json::array();
  for (const auto& B : an.minimal()) {
    bool first = subspace_product(A, R, B).is_zero() && subspace_product(A, B, R2).is_zero();
    bool second = subspace_product(A, B, R).is_zero() && subspace_product(A, R2, B).is_zero();
    sides.push_back({{"B", S(B)}, {"RB_and_BR2_zero", first}, {"BR_and_R2B_zero", second}});
    if (!first && !second)
      return violated(an, r, "minimal ideal satisfies neither side condition", {{"B", S(B)}, {"R", S(R)}});
  }
  r.witness = {{"R", S(R)}, {"minimal_ideals", sides}};
}

void bimax(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  const auto& p = an.profile();
  if (!require(r, p.right_nilpotent || p.left_nilpotent,
               "hypothesis not met: algebra is neither right nor left nilpotent"))
    return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  const Subspace& phi = an.phi();
  if (p.right_nilpotent) {
    for (const auto& M : an.maximal())
      if (!is_left_ideal(A, M)) return violated(an, r, "a maximal subalgebra is not a left ideal", {{"M", S(M)}});
    Subspace A3 = subspace_product(A, an.sq(), A.whole());
    if (!phi.contains(A3)) return violated(an, r, "A^3 is not inside phi(A)", {{"A3", S(A3)}, {"phi", S(phi)}});
  }
  if (p.left_nilpotent) {
    for (const auto& M : an.maximal())
      if (!is_right_ideal(A, M)) return violated(an, r, "a maximal subalgebra is not a right ideal", {{"M", S(M)}});
    Subspace A3 = subspace_product(A, A.whole(), an.sq());
    if (!phi.contains(A3)) return violated(an, r, "^3A is not inside phi(A)", {{"3A", S(A3)}, {"phi", S(phi)}});
  }
  r.witness = {{"phi", S(phi)}, {"maximal_subalgebras", an.maximal().size()}};
}

void ann_subalgebras(Analysis& an, VerificationReport& r, IK kind) {
  if (!require(r, an.in(kind), not_in(kind))) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  for (const auto& B : an.subalgebras()) {
    Subspace I = idealizer(A, B);
    if (!is_subalgebra(A, I))
      return violated(an, r, "the idealiser of a subalgebra is not a subalgebra", {{"B", S(B)}, {"idealiser", S(I)}});
    Subspace N = annihilator(A, B);
    if (!is_subalgebra(A, N))
      return violated(an, r, "the annihilator of a subalgebra is not a subalgebra", {{"B", S(B)}, {"Ann", S(N)}});
  }
  for (const auto& B : an.ideals()) {
    Subspace N = annihilator(A, B);
    if (!is_ideal(A, N))
      return violated(an, r, "the annihilator of an ideal is not an ideal", {{"B", S(B)}, {"Ann", S(N)}});
  }
  r.witness = {{"subalgebras", an.subalgebras().size()}, {"ideals", an.ideals().size()}};
}

void minimal_zero_or_simple(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.finite(), kFinite)) return;
  Json kinds = Json::array();
  for (const auto& B : an.minimal()) {
    bool zero = square(an.A, B).is_zero();
    bool simple = !zero && is_simple_algebra_ideal(an, B);
    kinds.push_back({{"B", S(B)}, {"kind", zero ? "zero" : simple ? "simple" : "neither"}});
    if (!zero && !simple)
      return violated(an, r, "a minimal ideal is neither a zero ideal nor a simple algebra", {{"B", S(B)}});
  }
  r.witness["minimal_ideals"] = kinds;
}

void ss_ideals(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.finite(), kFinite)) return;
  if (!require(r, an.semisimple(), "hypothesis not met: algebra is not semisimple")) return;
  const Algebra& A = an.A;
  std::size_t checked = 0;
  for (const auto& B : an.ideals()) {
    if (B.is_zero() || !an.sq().contains(B)) continue;
    ++checked;
    Subspace sum = A.zero_subspace();
    std::vector<Subspace> parts;
    for (const auto& M : an.minimal()) {
      if (!B.contains(M) || subspace_sum(sum, M).dim() != sum.dim() + M.dim()) continue;
      if (!is_simple_algebra_ideal(an, M))
        return violated(an, r, "a minimal ideal inside S^2 is not simple", {{"B", S(B)}, {"M", S(M)}});
      sum = subspace_sum(sum, M);
      parts.push_back(M);
    }
    if (sum != B)
      return violated(an, r, "an ideal inside S^2 is not a direct sum of minimal ideals",
                      {{"B", S(B)}, {"sum_of_minimal_ideals_inside", S(sum)}});
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (i != j && !subspace_product(A, parts[i], parts[j]).is_zero())
          return violated(an, r, "summands do not annihilate each other",
                          {{"S_i", S(parts[i])}, {"S_j", S(parts[j])}});
  }
  r.witness["ideals_inside_Ssq"] = checked;
}

void biss(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.finite(), kFinite)) return;
  if (!require(r, an.semisimple(), "hypothesis not met: algebra is not semisimple")) return;
  const Algebra& A = an.A;
  std::optional<SemisimpleBicommutativeDecomposition> dec;
  try {
    dec = decompose_semisimple_bicommutative(A, an.opt.budget, true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Violation) throw;
    return violated(an, r, e.what());
  }
  const auto& d = *dec;
  Json simples = Json::array(), pattern = Json::array();
  std::size_t total = 0;
  Subspace sum = A.zero_subspace();
  for (std::size_t i = 0; i < d.simples.size(); ++i) {
    simples.push_back(S(d.simples[i]));
    total += d.simples[i].dim();
    sum = subspace_sum(sum, d.simples[i]);
    const auto& act = d.action_pattern[i];
    pattern.push_back({{"SiU_zero", act.simple_times_complement_zero}, {"USi_zero", act.complement_times_simple_zero}});
  }
  r.witness = {{"Ssq", S(d.square)}, {"simples", simples}, {"U", S(d.complement)}, {"pattern", pattern}};
  if (sum != d.square || total != d.square.dim())
    return violated(an, r, "simples do not form a direct sum equal to S^2", r.witness);
  if (subspace_sum(d.square, d.complement) != A.whole() || !subspace_intersect(d.square, d.complement).is_zero())
    return violated(an, r, "S != S^2 (+) U", r.witness);
  if (!square(A, d.complement).is_zero()) return violated(an, r, "U^2 != 0", r.witness);
  for (const auto& act : d.action_pattern)
    if (!act.simple_times_complement_zero && !act.complement_times_simple_zero)
      return violated(an, r, "some S_i has S_iU != 0 and US_i != 0", r.witness);
}

Json associativity_failure(const Algebra& A) {
  auto w = identity_witness(A, IK::Associative);
  if (!w) return Json::object();
  return {{"i", w->i}, {"j", w->j}, {"k", w->k}};
}

bool assosym_gate(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Assosymmetric), not_in(IK::Assosymmetric))) return false;
  return require(r, an.char_not_2_3(), "hypothesis not met: characteristic is 2 or 3");
}

void kleinfeld(Analysis& an, VerificationReport& r) {
  if (!assosym_gate(an, r)) return;
  if (!require(r, an.finite(), kFinite)) return;
  bool ss = an.semisimple(), no_zero = an.zsoc().is_zero();
  if (!require(r, ss || no_zero, "hypothesis not met: algebra is not semisimple and has a nonzero zero ideal"))
    return;
  r.witness = {{"semisimple", ss}, {"no_zero_ideals", no_zero}};
  if (!check_identity(an.A, IK::Associative))
    violated(an, r, "algebra is not associative", {{"basis_triple", associativity_failure(an.A)}});
}

void assosym_solvable(Analysis& an, VerificationReport& r) {
  if (!assosym_gate(an, r)) return;
  if (!require(r, an.profile().solvable, "hypothesis not met: algebra is not solvable")) return;
  if (!an.profile().nilpotent) violated(an, r, "solvable but not nilpotent");
}

void assosym_quotient(Analysis& an, VerificationReport& r) {
  if (!assosym_gate(an, r)) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Subspace& N = an.N();
  r.witness = {{"N", S(N)}, {"R", S(an.R())}};
  if (N != an.R()) return violated(an, r, "N(A) != R(A)", r.witness);
  Algebra q = quotient(an.A, N).algebra;
  if (!check_identity(q, IK::Associative))
    violated(an, r, "A/N(A) is not associative",
             {{"N", S(N)}, {"quotient", algebra_to_json(q)}, {"basis_triple", associativity_failure(q)}});
}

void assosym_phi(Analysis& an, VerificationReport& r) {
  if (!assosym_gate(an, r)) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Subspace& phi = an.phi();
  r.witness = {{"phi", S(phi)}, {"N", S(an.N())}};
  if (!nilpotent_subspace(an.A, phi)) return violated(an, r, "phi(A) is not nilpotent", r.witness);
  if (!an.N().contains(phi)) violated(an, r, "phi(A) is not inside N(A)", r.witness);
}

void novikov_equivalences(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return;
  const auto& p = an.profile();
  bool asq = nilpotent_subspace(an.A, an.sq());
  r.witness = {{"right_nilpotent", p.right_nilpotent}, {"Asq_nilpotent", asq}, {"solvable", p.solvable}};
  if (p.right_nilpotent != asq || asq != p.solvable)
    violated(an, r, "the three conditions disagree", r.witness);
}

void left_nilpotent_novikov(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return;
  if (!require(r, an.profile().left_nilpotent, "hypothesis not met: algebra is not left nilpotent")) return;
  if (!an.profile().nilpotent) violated(an, r, "left nilpotent but not nilpotent");
}

void novikov_solvable_phi(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return;
  if (!require(r, an.profile().solvable, "hypothesis not met: algebra is not solvable")) return;
  if (!require(r, an.finite(), kFinite)) return;
  phi_nilpotent_in_asq(an, r);
}

void novar(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return;
  if (!require(r, an.finite(), kFinite)) return;
  Subspace AR = subspace_product(an.A, an.A.whole(), an.R());
  r.witness = {{"R", S(an.R())}, {"AR", S(AR)}};
  if (!is_ideal(an.A, AR)) return violated(an, r, "AR is not an ideal", r.witness);
  if (!nilpotent_subspace(an.A, AR)) violated(an, r, "AR is not nilpotent", r.witness);
}

void split_iff_phi_free(Analysis& an, VerificationReport& r) {
  if (!require(r, an.natural(), "hypothesis not met: algebra is in none of the natural classes")) return;
  if (!require(r, an.finite(), kFinite)) return;
  bool in_class = an.in(IK::Bicommutative) || (an.in(IK::Assosymmetric) && an.char_not_2_3()) ||
                  (an.in(IK::NovikovLeft) && an.profile().solvable);
  const Subspace& phi = an.phi();
  bool phi_nil = nilpotent_subspace(an.A, phi);
  if (!require(r, in_class || phi_nil,
               "hypothesis not met: phi(A) is not nilpotent and A is outside the classes where it must be"))
    return;
  auto C = find_subalgebra_complement(an.A, an.zsoc(), an.opt.budget);
  r.witness = {{"phi", S(phi)}, {"Zsoc", S(an.zsoc())}, {"complement", C ? S(*C) : Json()}};
  if (!phi_nil) return violated(an, r, "phi(A) is not nilpotent", {{"phi", S(phi)}});
  if (phi.is_zero() && !C) return violated(an, r, "phi-free but Zsoc(A) has no subalgebra complement", r.witness);
  if (!phi.is_zero() && C) violated(an, r, "phi(A) != 0 but A splits over Zsoc(A)", r.witness);
}

void t_socle(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative) || an.in(IK::Assosymmetric) || an.in(IK::NovikovLeft),
               "hypothesis not met: algebra is not bicommutative, assosymmetric or Novikov"))
    return;
  if (!require(r, an.finite(), kFinite)) return;
  if (!require(r, an.phi().is_zero(), "hypothesis not met: algebra is not phi-free")) return;
  Subspace ann = annihilator(an.A, an.soc());
  r.witness = {{"Zsoc", S(an.zsoc())}, {"N", S(an.N())}, {"Ann_Soc", S(ann)}};
  if (an.zsoc() != an.N() || an.N() != ann) violated(an, r, "Zsoc(A), N(A), Ann(Soc(A)) are not all equal", r.witness);
}

void biphifree(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  auto C = find_subalgebra_complement(A, an.zsoc(), an.opt.budget);
  if (!an.phi().is_zero()) {
    r.witness = {{"phi", S(an.phi())}};
    if (C) violated(an, r, "phi(A) != 0 but A splits over Zsoc(A)", {{"phi", S(an.phi())}, {"C", S(*C)}});
    return;
  }
  if (!C) return violated(an, r, "phi-free but Zsoc(A) has no subalgebra complement", {{"Zsoc", S(an.zsoc())}});
  auto st = bicommutative_phi_free_structure(A, an.zsoc(), *C, an.opt.budget);
  r.witness = {{"Zsoc", S(an.zsoc())}, {"C", S(*C)}, {"D", S(st.D)}, {"Z1", S(st.Z1)}, {"Z2", S(st.Z2)},
               {"E_candidates", st.e_candidates}};
  if (st.E) r.witness["E"] = S(*st.E);
  if (st.e_decomposition) {
    Json simples = Json::array();
    for (const auto& s : st.e_decomposition->simples) simples.push_back(S(s));
    r.witness["E_simples"] = simples;
    r.witness["U"] = S(st.e_decomposition->complement);
  }
  if (st.e_candidates > 1) note(r, "E is not unique; the first complement in search order is reported");
  if (!st.failures.empty()) {
    std::string all;
    for (const auto& f : st.failures) all += (all.empty() ? "" : "; ") + f;
    violated(an, r, all, r.witness);
  }
}

void phifree_novikov(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return;
  if (!require(r, an.finite(), kFinite)) return;
  if (!require(r, an.phi().is_zero(), "hypothesis not met: algebra is not phi-free")) return;
  note(r, "checked for every subalgebra complement of Zsoc(A)");
  const Algebra& A = an.A;
  std::size_t count = 0;
  for_each_complement(A.whole(), an.zsoc(), an.opt.budget, [&](const Subspace& C) {
    if (!is_subalgebra(A, C)) return true;
    ++count;
    Subspace cr = subspace_intersect(C, an.R());
    if (!subspace_product(A, A.whole(), cr).is_zero()) {
      violated(an, r, "A(C meet R) != 0", {{"C", S(C)}, {"R", S(an.R())}});
      return false;
    }
    return true;
  });
  r.witness = {{"Zsoc", S(an.zsoc())}, {"R", S(an.R())}, {"complements", count}};
  if (count == 0) violated(an, r, "phi-free but Zsoc(A) has no subalgebra complement", r.witness);
}

void arr(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return;
  if (!require(r, an.finite(), kFinite)) return;
  const Algebra& A = an.A;
  Subspace ARR = subspace_product(A, subspace_product(A, A.whole(), an.R()), an.R());
  r.witness = {{"ARR", S(ARR)}, {"phi", S(an.phi())}, {"Asq", S(an.sq())}};
  if (!an.phi().contains(ARR)) return violated(an, r, "(AR)R is not inside phi(A)", r.witness);
  if (!an.sq().contains(an.phi())) violated(an, r, "phi(A) is not inside A^2", r.witness);
}

// Characteristic 0 statements need R and phi(A) over Q. R is known when A is
// solvable (or supplied as an assumption); phi(A) when A is nilpotent.
bool char0_gate(Analysis& an, VerificationReport& r, bool need_R_nilpotent, Subspace& R, Subspace& phi) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return false;
  if (!require(r, an.ch() == 0, "hypothesis not met: characteristic is not 0")) return false;
  if (an.opt.assume && an.opt.assume->radical) {
    R = *an.opt.assume->radical;
  } else if (an.opt.certified_radical) {
    R = *an.opt.certified_radical;
  } else if (an.profile().solvable) {
    R = an.A.whole();
  } else {
    return require(r, false, "requires finite field (the radical over Q is only known for solvable algebras)");
  }
  auto p = certified_phi(an, r);
  if (!require(r, p.has_value(), "requires finite field (phi(A) over Q is only known for nilpotent algebras)"))
    return false;
  phi = *p;
  if (need_R_nilpotent && !require(r, nilpotent_subspace(an.A, R), "hypothesis not met: radical is not nilpotent"))
    return false;
  return true;
}

void char0(Analysis& an, VerificationReport& r, CheckId id) {
  Subspace R = an.A.zero_subspace(), phi = an.A.zero_subspace();
  if (!char0_gate(an, r, id != CheckId::Char0PhiInRsq, R, phi)) return;
  Subspace R2 = square(an.A, R);
  r.witness = {{"R", S(R)}, {"Rsq", S(R2)}, {"phi", S(phi)}};
  switch (id) {
    case CheckId::Char0NovikovSplit:
      if (!R.is_full()) note(r, "the semisimple complement S is not searched for over Q");
      [[fallthrough]];
    case CheckId::Char0RadZeroAlgebra:
      if (phi.is_zero() != R2.is_zero()) violated(an, r, "phi-free does not match R being a zero algebra", r.witness);
      break;
    case CheckId::Char0PhiInRsq:
      if (!R2.contains(phi)) return violated(an, r, "phi(A) is not inside R^2", r.witness);
      if (!nilpotent_subspace(an.A, phi)) violated(an, r, "phi(A) is not nilpotent", r.witness);
      break;
    case CheckId::Char0PhiEqRsq:
      if (phi != R2) violated(an, r, "phi(A) != R^2", r.witness);
      break;
    default: break;
  }
}

void a3(Analysis& an, VerificationReport& r) {
  const Algebra& A = an.A;
  Subspace A3 = subspace_product(A, an.sq(), A.whole());
  if (!require(r, A3.is_zero(), "hypothesis not met: A^3 != 0")) return;
  bool nov = an.in(IK::NovikovLeft), bic = an.in(IK::Bicommutative);
  r.witness = {{"novikovLeft", nov}, {"bicommutative", bic}};
  if (nov && !check_identity(A, IK::Bicommutative)) return violated(an, r, "Novikov but not bicommutative");
  if (bic && !check_identity(A, IK::NovikovLeft)) violated(an, r, "bicommutative but not Novikov");
}

bool all_maximal_left_ideals(Analysis& an) {
  for (const auto& M : an.maximal())
    if (!is_left_ideal(an.A, M)) return false;
  return true;
}

void novmax(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::NovikovLeft), not_in(IK::NovikovLeft))) return;
  if (!require(r, an.finite(), kFinite)) return;
  bool i = an.profile().right_nilpotent;
  bool ii = an.phi().contains(subspace_product(an.A, an.sq(), an.A.whole()));
  bool iii = all_maximal_left_ideals(an);
  r.witness = {{"right_nilpotent", i}, {"A3_in_phi", ii}, {"maximal_are_left_ideals", iii}};
  if (i && !ii) return violated(an, r, "right nilpotent but A^3 is not inside phi(A)", r.witness);
  if (ii && !iii) violated(an, r, "A^3 inside phi(A) but a maximal subalgebra is not a left ideal", r.witness);
}

void solvable_bicomm_a3(Analysis& an, VerificationReport& r) {
  if (!require(r, an.in(IK::Bicommutative), not_in(IK::Bicommutative))) return;
  if (!require(r, an.profile().solvable, "hypothesis not met: algebra is not solvable")) return;
  if (!require(r, an.finite(), kFinite)) return;
  bool i = an.phi().contains(subspace_product(an.A, an.sq(), an.A.whole()));
  bool ii = all_maximal_left_ideals(an);
  r.witness = {{"A3_in_phi", i}, {"maximal_are_left_ideals", ii}};
  if (i != ii) violated(an, r, "the two conditions disagree", r.witness);
}

void dispatch(Analysis& an, VerificationReport& r) {
  switch (r.check) {
    case CheckId::NaturalProductBicommutative: return natural_product(an, r, IK::Bicommutative);
    case CheckId::NaturalProductAssosymmetric: return natural_product(an, r, IK::Assosymmetric);
    case CheckId::NaturalProductNovikov: return natural_product(an, r, IK::NovikovLeft);
    case CheckId::NilpotentMaxSubalgIdeal: return nilpotent_max_subalg_ideal(an, r);
    case CheckId::PhiEqAsqNilpotent: return phi_eq_Asq_nilpotent(an, r);
    case CheckId::WeaklyNilpotentImpliesNilpotent: return weakly_nilpotent_implies_nilpotent(an, r);
    case CheckId::ChiefFactorAnnihilated: return chief_factor_annihilated(an, r);
    case CheckId::Dt1AsqCommAssoc: return dt1(an, r);
    case CheckId::SolvableBicommAsqNilpotent: return solvable_bicomm_Asq_nilpotent(an, r);
    case CheckId::ArRaNilpotentBicomm: return ar_ra(an, r);
    case CheckId::FittingSubalgebra: return fitting_subalgebra(an, r);
    case CheckId::FactorActsNilpotently: return factor_acts_nilpotently(an, r);
    case CheckId::PhiRightNil: return phi_right_nil(an, r);
    case CheckId::PhiNilpotentBicomm: return phi_nilpotent_bicomm(an, r);
    case CheckId::Min1MinimalIdealSides: return min1(an, r);
    case CheckId::BimaxRightNilpotent: return bimax(an, r);
    case CheckId::BiannSubalgebras: return ann_subalgebras(an, r, IK::Bicommutative);
    case CheckId::MinimalIdealZeroOrSimple: return minimal_zero_or_simple(an, r);
    case CheckId::SsIdealsInAsq: return ss_ideals(an, r);
    case CheckId::BissDecomposition: return biss(an, r);
    case CheckId::KleinfeldSemisimpleAssociative: return kleinfeld(an, r);
    case CheckId::AssosymSolvableIsNilpotent: return assosym_solvable(an, r);
    case CheckId::AssosymQuotientAssociative: return assosym_quotient(an, r);
    case CheckId::AssosymPhiNilpotent: return assosym_phi(an, r);
    case CheckId::NovikovEquivalences: return novikov_equivalences(an, r);
    case CheckId::LeftNilpotentNovikovNilpotent: return left_nilpotent_novikov(an, r);
    case CheckId::NovikovSolvablePhiNilpotent: return novikov_solvable_phi(an, r);
    case CheckId::NovarArNilpotent: return novar(an, r);
    case CheckId::NovikovAnnSubalgebras: return ann_subalgebras(an, r, IK::NovikovLeft);
    case CheckId::SplitIffPhiFree: return split_iff_phi_free(an, r);
    case CheckId::TSocleEqualities: return t_socle(an, r);
    case CheckId::BiphifreeStructure: return biphifree(an, r);
    case CheckId::PhifreeNovikov: return phifree_novikov(an, r);
    case CheckId::ArrInclusions: return arr(an, r);
    case CheckId::Char0NovikovSplit:
    case CheckId::Char0RadZeroAlgebra:
    case CheckId::Char0PhiInRsq:
    case CheckId::Char0PhiEqRsq: return char0(an, r, r.check);
    case CheckId::A3NovikovIffBicomm: return a3(an, r);
    case CheckId::NovmaxImplications: return novmax(an, r);
    case CheckId::SolvableBicommA3IffLeftIdeals: return solvable_bicomm_a3(an, r);
  }
}

VerificationReport run(Analysis& an, CheckId id) {
  VerificationReport r;
  r.check = id;
  r.hypotheses_assumed = an.opt.assume.has_value();
  r.applicable = true;
  r.holds = true;
  try {
    dispatch(an, r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unsupported) {
      r.applicable = false;
      r.reason = e.what();
    } else {
      violated(an, r, std::string("computation failed: ") + e.what());
    }
  }
  if (!r.applicable) {
    r.holds = false;
    r.counterexample = nullptr;
    r.witness = Json::object();
  }
  return r;
}

}  // namespace

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& c : kCatalogue) v.push_back(c.id);
    return v;
  }();
  return ids;
}

std::string to_string(CheckId id) { return info(id).name; }

std::optional<CheckId> parse_check_id(std::string_view s) {
  for (const auto& c : kCatalogue)
    if (s == c.name) return c.id;
  return std::nullopt;
}

std::string describe(CheckId id) { return info(id).statement; }

VerificationReport verify(const Algebra& A, CheckId id, const VerifyOptions& options) {
  Analysis an(A, options);
  return run(an, id);
}

std::vector<VerificationReport> verify_all(const Algebra& A, const VerifyOptions& options) {
  Analysis an(A, options);
  std::vector<VerificationReport> out;
  for (CheckId id : all_checks()) out.push_back(run(an, id));
  return out;
}

Subspace bracket_power_oracle(const Algebra& A, std::size_t n) {
  if (n == 0) fail(ErrorKind::Usage, "bracket power oracle: n must be at least 1");
  if (n > 6) fail(ErrorKind::Unsupported, "bracket power oracle: n = " + std::to_string(n) + " exceeds the limit of 6");
  // products[m] holds the distinct nonzero values of all bracketed products
  // of m basis elements.
  std::vector<std::set<Vector, decltype([](const Vector& a, const Vector& b) {
                                return compare_vectors(a, b) < 0;
                              })>>
      products(n + 1);
  for (std::size_t i = 0; i < A.dim(); ++i) products[1].insert(A.basis_element(i));
  for (std::size_t m = 2; m <= n; ++m)
    for (std::size_t i = 1; i < m; ++i)
      for (const auto& x : products[i])
        for (const auto& y : products[m - i]) {
          Vector p = multiply(A, x, y);
          if (!is_zero_vector(p)) products[m].insert(std::move(p));
        }
  return span(std::vector<Vector>(products[n].begin(), products[n].end()), A.dim(), A.field());
}

}  // namespace nassoc
