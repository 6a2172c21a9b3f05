#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nassoc/enumerate.hpp"
#include "nassoc/io.hpp"

namespace nassoc {

// One entry per checked statement, in catalogue order.
enum class CheckId {
  NaturalProductBicommutative,
  NaturalProductAssosymmetric,
  NaturalProductNovikov,
  NilpotentMaxSubalgIdeal,
  PhiEqAsqNilpotent,
  WeaklyNilpotentImpliesNilpotent,
  ChiefFactorAnnihilated,
  Dt1AsqCommAssoc,
  SolvableBicommAsqNilpotent,
  ArRaNilpotentBicomm,
  FittingSubalgebra,
  FactorActsNilpotently,
  PhiRightNil,
  PhiNilpotentBicomm,
  Min1MinimalIdealSides,
  BimaxRightNilpotent,
  BiannSubalgebras,
  MinimalIdealZeroOrSimple,
  SsIdealsInAsq,
  BissDecomposition,
  KleinfeldSemisimpleAssociative,
  AssosymSolvableIsNilpotent,
  AssosymQuotientAssociative,
  AssosymPhiNilpotent,
  NovikovEquivalences,
  LeftNilpotentNovikovNilpotent,
  NovikovSolvablePhiNilpotent,
  NovarArNilpotent,
  NovikovAnnSubalgebras,
  SplitIffPhiFree,
  TSocleEqualities,
  BiphifreeStructure,
  PhifreeNovikov,
  ArrInclusions,
  Char0NovikovSplit,
  Char0RadZeroAlgebra,
  Char0PhiInRsq,
  Char0PhiEqRsq,
  A3NovikovIffBicomm,
  NovmaxImplications,
  SolvableBicommA3IffLeftIdeals,
};

const std::vector<CheckId>& all_checks();
std::string to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view s);
// The statement being checked, in words.
std::string describe(CheckId id);

// Hypotheses taken as given instead of computed from the table. Used to run
// checks on deliberately corrupted tables; reports carry the flag.
struct Assumptions {
  std::vector<IdentityKind> identities;
  std::optional<Subspace> radical;  // solvable radical
  bool nilpotent = false;           // treat A as nilpotent
};

struct VerifyOptions {
  EnumerationBudget budget;
  std::optional<Assumptions> assume;
  // Known solvable radical (fixture data); lets characteristic 0 checks run.
  std::optional<Subspace> certified_radical;
  // Element sampling over Q.
  std::uint64_t seed = 1;
  std::size_t samples = 24;
};

struct VerificationReport {
  CheckId check;
  bool applicable = false;
  bool holds = false;  // meaningful only when applicable
  bool hypotheses_assumed = false;
  std::string reason;  // why not applicable
  Json witness = Json::object();
  Json counterexample;  // null unless applicable and violated
  std::vector<std::string> notes;
};

VerificationReport verify(const Algebra& A, CheckId id, const VerifyOptions& options = {});
std::vector<VerificationReport> verify_all(const Algebra& A, const VerifyOptions& options = {});

// Span of every product of n basis elements under every bracketing.
Subspace bracket_power_oracle(const Algebra& A, std::size_t n);

}  // namespace nassoc
