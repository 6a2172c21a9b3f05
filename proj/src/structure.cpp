#include "nassoc/structure.hpp"

#include "nassoc/series.hpp"

namespace nassoc {

namespace {

bool is_simple_ideal(const Algebra& A, const Subspace& B, const EnumerationBudget& budget) {
  if (B.is_zero() || square(A, B).is_zero()) return false;
  Algebra b = restrict_to(A, B).algebra;
  auto mins = minimal_ideals(b, budget);
  return mins.size() == 1 && mins.front().is_full();
}

bool independent_of(const Subspace& sum, const Subspace& piece) {
  return subspace_sum(sum, piece).dim() == sum.dim() + piece.dim();
}

}  // namespace

SemisimpleBicommutativeDecomposition decompose_semisimple_bicommutative(const Algebra& S,
                                                                       const EnumerationBudget& budget,
                                                                       bool trust_hypotheses) {
  require_finite_field(S.field(), "semisimple decomposition");
  if (!trust_hypotheses) {
    if (!check_identity(S, IdentityKind::Bicommutative))
      fail(ErrorKind::Refused, "precondition failed: algebra is not bicommutative");
    if (!is_semisimple(S, budget))
      fail(ErrorKind::Refused, "precondition failed: algebra is not semisimple (nonzero solvable radical)");
  }

  SemisimpleBicommutativeDecomposition out{square(S, S.whole()), {}, S.zero_subspace(), {}};
  Subspace sum = S.zero_subspace();
  for (auto& m : minimal_ideals(S, budget)) {
    if (!out.square.contains(m) || !independent_of(sum, m)) continue;
    if (!is_simple_ideal(S, m, budget))
      fail(ErrorKind::Violation, "theorem violation: a minimal ideal inside S^2 is not simple");
    sum = subspace_sum(sum, m);
    out.simples.push_back(std::move(m));
  }
  if (sum != out.square)
    fail(ErrorKind::Violation, "theorem violation: minimal ideals inside S^2 do not sum to S^2");

  auto U = find_subalgebra_complement(S, out.square, budget);
  if (!U) fail(ErrorKind::Violation, "theorem violation: S^2 has no subalgebra complement");
  out.complement = std::move(*U);
  if (!square(S, out.complement).is_zero())
    fail(ErrorKind::Violation, "theorem violation: complement U has U^2 != 0");
  for (const auto& s : out.simples) {
    out.action_pattern.push_back({subspace_product(S, s, out.complement).is_zero(),
                                  subspace_product(S, out.complement, s).is_zero()});
  }
  return out;
}

std::optional<Subspace> find_subalgebra_complement(const Algebra& A, const Subspace& W,
                                                   const EnumerationBudget& budget) {
  std::optional<Subspace> found;
  for_each_complement(A.whole(), W, budget, [&](const Subspace& c) {
    if (!is_subalgebra(A, c)) return true;
    found = c;
    return false;
  });
  return found;
}

BicommutativePhiFreeStructure bicommutative_phi_free_structure(const Algebra& A, const Subspace& zsoc,
                                                               const Subspace& C,
                                                               const EnumerationBudget& budget) {
  BicommutativePhiFreeStructure st{radical(A, RadicalKind::Solvable, budget),
                                   A.zero_subspace(),
                                   std::nullopt,
                                   std::nullopt,
                                   A.zero_subspace(),
                                   A.zero_subspace(),
                                   false,
                                   false,
                                   false,
                                   0,
                                   {}};
  st.D = subspace_intersect(C, st.radical);
  st.d_square_zero = square(A, st.D).is_zero();
  if (!st.d_square_zero) st.failures.push_back("D^2 != 0");
  st.radical_splits = subspace_sum(zsoc, st.D) == st.radical && subspace_intersect(zsoc, st.D).is_zero();
  if (!st.radical_splits) st.failures.push_back("R != Zsoc(A) (+) D");

  // E: complement of D inside C with DE = ED = 0.
  Restriction c_view = restrict_to(A, C);
  Subspace d_local = c_view.pull(st.D);
  const Algebra& c_alg = c_view.algebra;
  for_each_complement(c_alg.whole(), d_local, budget, [&](const Subspace& e) {
    if (!is_subalgebra(c_alg, e)) return true;
    if (!subspace_product(c_alg, d_local, e).is_zero() || !subspace_product(c_alg, e, d_local).is_zero())
      return true;
    ++st.e_candidates;
    if (!st.E) st.E = c_view.embed(e);
    return true;
  });
  if (!st.E) {
    st.failures.push_back("no subalgebra E with C = D + E and DE = ED = 0");
  } else {
    Restriction e_view = restrict_to(A, *st.E);
    if (!is_semisimple(e_view.algebra, budget)) st.failures.push_back("E is not semisimple");
    try {
      auto dec = decompose_semisimple_bicommutative(e_view.algebra, budget, true);
      dec.square = e_view.embed(dec.square);
      for (auto& s : dec.simples) s = e_view.embed(s);
      dec.complement = e_view.embed(dec.complement);
      st.e_decomposition = std::move(dec);
    } catch (const Error& e) {
      st.failures.push_back(std::string("E does not decompose: ") + e.what());
    }
  }

  // Z1 collects zero ideals killed by R on the right; Z2 is a direct
  // complement built from those killed on the left.
  st.zsoc_splits = true;
  auto zeros = minimal_zero_ideals(A, budget);
  for (const auto& z : zeros)
    if (subspace_product(A, z, st.radical).is_zero()) st.Z1 = subspace_sum(st.Z1, z);
  for (const auto& z : zeros) {
    if (subspace_product(A, z, st.radical).is_zero()) continue;
    if (!subspace_product(A, st.radical, z).is_zero()) {
      st.zsoc_splits = false;
      st.failures.push_back("a minimal zero ideal Z has ZR != 0 and RZ != 0");
      continue;
    }
    if (independent_of(subspace_sum(st.Z1, st.Z2), z)) st.Z2 = subspace_sum(st.Z2, z);
  }
  if (subspace_sum(st.Z1, st.Z2) != zsoc || !subspace_intersect(st.Z1, st.Z2).is_zero()) {
    st.zsoc_splits = false;
    st.failures.push_back("Zsoc(A) != Z1 (+) Z2");
  }
  return st;
}

NovikovPhiFreeWitness novikov_phi_free_witness(const Algebra& A, const Subspace& C,
                                               const EnumerationBudget& budget) {
  NovikovPhiFreeWitness w{radical(A, RadicalKind::Solvable, budget), A.zero_subspace()};
  w.c_cap_r = subspace_intersect(C, w.radical);
  w.annihilated = subspace_product(A, A.whole(), w.c_cap_r).is_zero();
  return w;
}

PhiFreeSplit phi_free_split(const Algebra& A, const EnumerationBudget& budget) {
  require_finite_field(A.field(), "phi-free splitting");
  auto fr = frattini(A, budget);
  if (!fr.ideal.is_zero())
    fail(ErrorKind::Refused, "algebra is not phi-free: Frattini ideal has dimension " +
                                 std::to_string(fr.ideal.dim()));
  PhiFreeSplit out{zero_socle(A, budget), A.zero_subspace(), std::nullopt, std::nullopt};
  auto C = find_subalgebra_complement(A, out.zsoc, budget);
  if (!C) fail(ErrorKind::Violation, "theorem violation: phi-free algebra does not split over its zero socle");
  out.complement = std::move(*C);
  if (check_identity(A, IdentityKind::Bicommutative))
    out.bicommutative = bicommutative_phi_free_structure(A, out.zsoc, out.complement, budget);
  if (check_identity(A, IdentityKind::NovikovLeft))
    out.novikov = novikov_phi_free_witness(A, out.complement, budget);
  return out;
}

AssosymmetricReport assosymmetric_report(const Algebra& A, const EnumerationBudget& budget) {
  if (!check_identity(A, IdentityKind::Assosymmetric))
    fail(ErrorKind::Refused, "precondition failed: algebra is not assosymmetric");
  AssosymmetricReport out;
  const auto ch = A.field().characteristic();
  if (ch == 2 || ch == 3) {
    out.reason = "characteristic " + std::to_string(ch) + " is excluded (requires characteristic other than 2, 3)";
    return out;
  }
  require_finite_field(A.field(), "assosymmetric radical report");
  out.applicable = true;
  out.semisimple = radical(A, RadicalKind::Solvable, budget).is_zero();
  if (out.semisimple) out.semisimple_associative = check_identity(A, IdentityKind::Associative);
  Subspace N = radical(A, RadicalKind::Nilpotent, budget);
  out.quotient_by_nilradical_associative = check_identity(quotient(A, N).algebra, IdentityKind::Associative);
  out.nilradical = std::move(N);
  return out;
}

NovikovRadicalReport novikov_radical_report(const Algebra& A, const EnumerationBudget& budget) {
  if (!check_identity(A, IdentityKind::NovikovLeft))
    fail(ErrorKind::Refused, "precondition failed: algebra is not (left) Novikov");
  require_finite_field(A.field(), "Novikov radical report");
  NovikovRadicalReport out{radical(A, RadicalKind::Solvable, budget), A.zero_subspace(), A.zero_subspace()};
  out.AR = subspace_product(A, A.whole(), out.radical);
  out.AR_is_ideal = is_ideal(A, out.AR);
  out.AR_nilpotent = is_subalgebra(A, out.AR) && is_nilpotent(restrict_to(A, out.AR).algebra);
  out.frattini_ideal = frattini(A, budget).ideal;
  out.ARR_in_phi = out.frattini_ideal.contains(subspace_product(A, out.AR, out.radical));
  out.phi_in_Asq = square(A, A.whole()).contains(out.frattini_ideal);
  return out;
}

}  // namespace nassoc
