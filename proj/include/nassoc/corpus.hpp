#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nassoc/enumerate.hpp"

namespace nassoc {

struct Fixture {
  std::string name;
  Algebra algebra;
  std::string provenance;
  // Identities known to hold (true) or fail (false); re-checked on load.
  std::map<IdentityKind, bool> certified;
  std::optional<Subspace> radical;  // solvable radical, when known
};

// Throws ErrorKind::Violation naming the fixture and property on mismatch.
void verify_fixture(const Fixture& f, const EnumerationBudget& budget = {});

std::vector<Fixture> builtin_fixtures();
std::optional<Fixture> find_fixture(const std::string& name);

// Named constructors shared by fixtures and tests.
Algebra make_A_ex(const FieldSpec& f);
Algebra make_zero_algebra(const FieldSpec& f, std::size_t n);
Algebra make_truncated_polynomial(const FieldSpec& f, std::size_t k);  // t, ..., t^k
Algebra make_N1(const FieldSpec& f);
Algebra make_A_nov(const FieldSpec& f);
Algebra make_FxF(const FieldSpec& f);

struct SearchOptions {
  enum class Mode { Exhaustive, Random };
  Mode mode = Mode::Exhaustive;
  std::size_t samples = 1000;  // random: tables drawn
  std::uint64_t seed = 1;
  double sparsity = 0.8;                   // random: probability a constant is zero
  std::optional<std::size_t> max_nonzero;  // exhaustive: bound on nonzero constants
  std::uint64_t max_tables = 10'000'000;   // exhaustive: candidate budget
};

// Number of candidate tables the exhaustive mode would visit, saturating at
// cap + 1.
std::uint64_t exhaustive_table_count(const FieldSpec& f, std::size_t n, std::optional<std::size_t> max_nonzero,
                                     std::uint64_t cap);

// Tables passing check_identity(kind) (every table when kind is empty).
// Exhaustive order: by number of nonzero constants, then positions
// lexicographically (position = (i*n + j)*n + k), then values in odometer
// order. Random mode is reproducible from the seed.
void for_each_search_result(const FieldSpec& f, std::size_t n, std::optional<IdentityKind> kind,
                            const SearchOptions& options, const std::function<void(const Algebra&)>& visit);
std::vector<Algebra> search(const FieldSpec& f, std::size_t n, std::optional<IdentityKind> kind,
                            const SearchOptions& options = {});

}  // namespace nassoc
