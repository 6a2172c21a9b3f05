#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nassoc/linalg.hpp"

namespace nassoc {

// Elements are coordinate vectors with respect to the algebra's basis.
using Element = Vector;

// A finite-dimensional algebra given by structure constants:
// e_i e_j = sum_k c_{ij}^k e_k. Immutable once built.
class Algebra {
 public:
  // The zero algebra of the given dimension.
  Algebra(const FieldSpec& f, std::size_t dim);
  // `table[i * dim + j]` is the coordinate vector of e_i e_j.
  Algebra(const FieldSpec& f, std::size_t dim, std::vector<Vector> table,
          std::vector<std::string> labels = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  const std::vector<Vector>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;

  // Matrix of x -> e_i x (left) and x -> x e_i (right).
  const Matrix& left_basis_operator(std::size_t i) const { return left_ops_[i]; }
  const Matrix& right_basis_operator(std::size_t i) const { return right_ops_[i]; }

  Algebra with_product(std::size_t i, std::size_t j, Vector value) const;
  Algebra with_labels(std::vector<std::string> labels) const;

  Element basis_element(std::size_t i) const { return unit_vector(field_, dim_, i); }
  Element zero_element() const { return zero_vector(field_, dim_); }
  Subspace whole() const { return Subspace::full(field_, dim_); }
  Subspace zero_subspace() const { return Subspace::zero(field_, dim_); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vector> table_;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_ops_, right_ops_;
  void build_operators();
};

Element multiply(const Algebra& A, std::span<const Scalar> a, std::span<const Scalar> b);
Element associator(const Algebra& A, std::span<const Scalar> x, std::span<const Scalar> y,
                   std::span<const Scalar> z);
bool is_element_of(const Algebra& A, std::span<const Scalar> a);

enum class IdentityKind {
  RightCommutative,
  LeftCommutative,
  Bicommutative,
  LeftSymmetric,
  RightSymmetric,
  Assosymmetric,
  NovikovLeft,
  NovikovRight,
  Associative,
  Commutative,
};

inline constexpr std::array<IdentityKind, 10> kAllIdentityKinds = {
    IdentityKind::RightCommutative, IdentityKind::LeftCommutative, IdentityKind::Bicommutative,
    IdentityKind::LeftSymmetric,    IdentityKind::RightSymmetric,  IdentityKind::Assosymmetric,
    IdentityKind::NovikovLeft,      IdentityKind::NovikovRight,    IdentityKind::Associative,
    IdentityKind::Commutative,
};

std::string to_string(IdentityKind k);
std::optional<IdentityKind> parse_identity_kind(std::string_view s);

// A basis triple (i, j, k) violating an identity.
struct IdentityWitness {
  IdentityKind failed;  // the primitive identity that fails
  std::size_t i, j, k;
};

// Identities are multilinear, so basis triples suffice.
bool check_identity(const Algebra& A, IdentityKind kind);
std::optional<IdentityWitness> identity_witness(const Algebra& A, IdentityKind kind);
// Assosymmetry checked directly against all six permutations of each triple.
bool check_assosymmetric_all_permutations(const Algebra& A);

Subspace subspace_product(const Algebra& A, const Subspace& U, const Subspace& V);
Subspace square(const Algebra& A, const Subspace& U);
bool is_subalgebra(const Algebra& A, const Subspace& U);
bool is_ideal(const Algebra& A, const Subspace& U);
bool is_left_ideal(const Algebra& A, const Subspace& U);
bool is_right_ideal(const Algebra& A, const Subspace& U);

Subspace subalgebra_closure(const Algebra& A, const std::vector<Vector>& generators);
Subspace ideal_closure(const Algebra& A, const std::vector<Vector>& generators);
Subspace ideal_closure(const Algebra& A, const Subspace& generators);

Subspace idealizer(const Algebra& A, const Subspace& B);
Subspace annihilator(const Algebra& A, const Subspace& B);
Subspace left_annihilator(const Algebra& A, const Subspace& B);   // {a : aB = 0}
Subspace right_annihilator(const Algebra& A, const Subspace& B);  // {a : Ba = 0}

// A/I on the coordinates complementary to the RREF pivots of I.
struct Quotient {
  Algebra algebra;
  Subspace ideal;
  std::vector<std::size_t> kept;  // columns of A used as the quotient basis

  Vector project(std::span<const Scalar> v) const;
  Vector lift(std::span<const Scalar> w) const;
  Subspace project(const Subspace& U) const;
  // Full preimage of a subspace of the quotient (contains the ideal).
  Subspace preimage(const Subspace& W) const;
};
Quotient quotient(const Algebra& A, const Subspace& I);

// A subalgebra U viewed as an algebra on its RREF basis.
struct Restriction {
  Algebra algebra;
  Subspace subalgebra;

  Vector embed(std::span<const Scalar> coords) const;
  Subspace embed(const Subspace& W) const;
  Vector coordinates(std::span<const Scalar> v) const;
  Subspace pull(const Subspace& W) const;  // W must lie inside the subalgebra
};
Restriction restrict_to(const Algebra& A, const Subspace& U);

Algebra opposite(const Algebra& A);
Algebra direct_sum(const Algebra& A, const Algebra& B);

enum class Side { Right, Left };

struct MulOperator {
  Side side;
  Element a;
  Matrix matrix;  // columns are images of the basis vectors
};
MulOperator mul_operator(const Algebra& A, std::span<const Scalar> a, Side side);
// Null component of rho_a (right) or lambda_a (left): kernel of its dim(A)-th power.
Subspace fitting_component(const Algebra& A, std::span<const Scalar> a, Side side);
bool acts_nilpotently(const Algebra& A, std::span<const Scalar> a, Side side);
bool is_right_nil(const Algebra& A, std::span<const Scalar> a);
bool is_left_nil(const Algebra& A, std::span<const Scalar> a);

}  // namespace nassoc
