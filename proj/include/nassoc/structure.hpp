#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nassoc/enumerate.hpp"

namespace nassoc {

// S = S^2 (+) U with S^2 the direct sum of simple ideals S_i and U a zero
// subalgebra acting trivially on each S_i from at least one side.
struct SemisimpleBicommutativeDecomposition {
  struct Action {
    bool simple_times_complement_zero;  // S_i U = 0
    bool complement_times_simple_zero;  // U S_i = 0
  };
  Subspace square;
  std::vector<Subspace> simples;
  Subspace complement;
  std::vector<Action> action_pattern;
};

// Refuses (ErrorKind::Refused) unless S is bicommutative and semisimple over a
// finite field; raises ErrorKind::Violation if the guaranteed pieces cannot be
// found. With `trust_hypotheses` the two hypotheses are taken as given.
SemisimpleBicommutativeDecomposition decompose_semisimple_bicommutative(const Algebra& S,
                                                                       const EnumerationBudget& budget,
                                                                       bool trust_hypotheses = false);

// Pieces of the phi-free bicommutative structure A = Zsoc (+) (D + E).
struct BicommutativePhiFreeStructure {
  Subspace radical;  // R(A)
  Subspace D;        // C meet R
  std::optional<Subspace> E;  // complement of D in C with DE = ED = 0
  std::optional<SemisimpleBicommutativeDecomposition> e_decomposition;  // in A's coordinates
  Subspace Z1;  // minimal zero ideals Z with Z R = 0
  Subspace Z2;  // further minimal zero ideals with R Z = 0
  bool d_square_zero = false;
  bool radical_splits = false;   // R = Zsoc (+) D
  bool zsoc_splits = false;      // Zsoc = Z1 (+) Z2 and every minimal zero ideal was placed
  std::size_t e_candidates = 0;  // number of admissible E found (non-uniqueness note)
  std::vector<std::string> failures;
};

struct NovikovPhiFreeWitness {
  Subspace radical;
  Subspace c_cap_r;
  bool annihilated = false;  // A (C meet R) = 0
};

struct PhiFreeSplit {
  Subspace zsoc;
  Subspace complement;
  std::optional<BicommutativePhiFreeStructure> bicommutative;
  std::optional<NovikovPhiFreeWitness> novikov;
};

// First subalgebra complement of W in A (complement order), if any.
std::optional<Subspace> find_subalgebra_complement(const Algebra& A, const Subspace& W,
                                                   const EnumerationBudget& budget);

// Refuses unless phi(A) = 0 over a finite field.
PhiFreeSplit phi_free_split(const Algebra& A, const EnumerationBudget& budget);

// The refinement of a split A = zsoc (+) C for bicommutative A, and the
// Novikov witness. Neither checks the identity class.
BicommutativePhiFreeStructure bicommutative_phi_free_structure(const Algebra& A, const Subspace& zsoc,
                                                               const Subspace& C,
                                                               const EnumerationBudget& budget);
NovikovPhiFreeWitness novikov_phi_free_witness(const Algebra& A, const Subspace& C,
                                               const EnumerationBudget& budget);

struct AssosymmetricReport {
  bool applicable = false;
  std::string reason;  // why not applicable
  bool semisimple = false;
  std::optional<bool> semisimple_associative;  // set when semisimple
  bool quotient_by_nilradical_associative = false;
  std::optional<Subspace> nilradical;
};

AssosymmetricReport assosymmetric_report(const Algebra& A, const EnumerationBudget& budget);

struct NovikovRadicalReport {
  Subspace radical;
  Subspace AR;
  Subspace frattini_ideal;
  bool AR_is_ideal = false;
  bool AR_nilpotent = false;
  bool ARR_in_phi = false;
  bool phi_in_Asq = false;
};

NovikovRadicalReport novikov_radical_report(const Algebra& A, const EnumerationBudget& budget);

}  // namespace nassoc
