#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nassoc/algebra.hpp"

namespace nassoc {

struct EnumerationBudget {
  std::uint64_t max_vectors = 10'000'000;
  std::uint64_t max_subspaces = 1'000'000;
};

void require_finite_field(const FieldSpec& f, std::string_view operation);

// q^n, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t n, std::uint64_t cap);
// Number of subspaces of F_q^n (sum of Gaussian binomials), saturating at cap + 1.
std::uint64_t subspace_count(std::uint64_t q, std::size_t n, std::uint64_t cap);

// Every vector of F_q^n in odometer order (last coordinate fastest).
void for_each_vector(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget,
                     const std::function<void(const Vector&)>& visit);
// One representative per line: first nonzero coordinate equal to 1.
void for_each_projective_vector(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget,
                                const std::function<void(const Vector&)>& visit);
// Every vector of a subspace (as combinations of its basis).
void for_each_vector_in(const Subspace& U, const EnumerationBudget& budget,
                        const std::function<void(const Vector&)>& visit);
// Every subspace of F_q^n in canonical order, built as RREF matrices
// dimension by dimension. The visitor may return false to stop early.
void for_each_subspace(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget,
                       const std::function<bool(const Subspace&)>& visit);
std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget);
// Subspaces of U (each returned in the ambient coordinates of U).
std::vector<Subspace> subspaces_of(const Subspace& U, const EnumerationBudget& budget);

// Every complement of W inside V (W a subspace of V). Complements are
// graphs of linear maps from the coordinate complement of W (in V's basis
// coordinates) into W, visited in odometer order of the map's matrix, so the
// coordinate complement itself comes first. The visitor may return false to
// stop.
void for_each_complement(const Subspace& V, const Subspace& W, const EnumerationBudget& budget,
                         const std::function<bool(const Subspace&)>& visit);

std::vector<Subspace> all_ideals(const Algebra& A, const EnumerationBudget& budget);
std::vector<Subspace> all_subalgebras(const Algebra& A, const EnumerationBudget& budget);

std::vector<Subspace> minimal_ideals(const Algebra& A, const EnumerationBudget& budget);
Subspace socle(const Algebra& A, const EnumerationBudget& budget);
Subspace zero_socle(const Algebra& A, const EnumerationBudget& budget);
// Minimal ideals with zero square.
std::vector<Subspace> minimal_zero_ideals(const Algebra& A, const EnumerationBudget& budget);

std::vector<Subspace> maximal_subalgebras(const Algebra& A, const EnumerationBudget& budget);

struct FrattiniResult {
  Subspace subalgebra;  // F(A): intersection of the maximal subalgebras
  Subspace ideal;       // phi(A): largest ideal inside F(A)
};
FrattiniResult frattini(const Algebra& A, const EnumerationBudget& budget);
// Frattini data from an already computed list of maximal subalgebras.
FrattiniResult frattini_from(const Algebra& A, const std::vector<Subspace>& maximal);

// Largest ideal of A contained in S.
Subspace ideal_core(const Algebra& A, const Subspace& S);

enum class RadicalKind { Solvable, Nilpotent, RightNil, LeftNil };
std::string to_string(RadicalKind k);
std::optional<RadicalKind> parse_radical_kind(std::string_view s);

// Bicommutative, assosymmetric, or (left or right) Novikov.
bool in_natural_class(const Algebra& A);

// Sum of the ideal closures of single vectors having the property. For the
// nil kinds the algebra must be in a natural class unless the check is
// explicitly waived.
Subspace radical(const Algebra& A, RadicalKind kind, const EnumerationBudget& budget,
                 bool require_natural_class = true);
bool is_semisimple(const Algebra& A, const EnumerationBudget& budget);

}  // namespace nassoc
