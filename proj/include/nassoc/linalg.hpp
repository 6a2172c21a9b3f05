#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "nassoc/field.hpp"

namespace nassoc {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero_vector(std::span<const Scalar> v);
// Lexicographic comparison of coordinates.
std::strong_ordering compare_vectors(std::span<const Scalar> a, std::span<const Scalar> b);

// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, std::size_t cols,
                          const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  Vector column(std::size_t c) const;

  void append_row(std::span<const Scalar> r);
  void truncate_rows(std::size_t rows);

  // Matrix-vector product M v for a column vector v of length cols().
  Vector apply(std::span<const Scalar> v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// Reduced row echelon form with zero rows dropped; row space is preserved.
Matrix rref(Matrix m);

// A subspace of F^n stored as its RREF basis, so equal subspaces have
// identical representations.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  // Trusts that `reduced` is already in RREF with no zero rows.
  static Subspace from_rref(Matrix reduced);

  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient(); }
  const FieldSpec& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;
  // Columns of F^n that are not pivot columns.
  std::vector<std::size_t> free_columns() const;

  // v minus its projection along the basis onto the pivot coordinates; zero
  // exactly when v lies in the subspace.
  Vector reduce(std::span<const Scalar> v) const;
  // Coordinates of the residue on the free columns; a linear functional
  // family whose joint kernel is the subspace.
  Vector residue_coords(std::span<const Scalar> v) const;
  // Coefficients c with v = sum c_r basis_r; requires contains(v).
  Vector coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  // Canonical order: dimension, then pivot columns, then entries row-major.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix basis);
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

void require_compatible(const Subspace& u, const Subspace& v);

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient, const FieldSpec& f);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, std::span<const Scalar> x);
bool contains(const Subspace& u, const Subspace& v);
// sum_r coeffs[r] * (basis row r of U).
Vector combination(const Subspace& U, std::span<const Scalar> coeffs);
// {x : M x = 0} as a subspace of F^cols.
Subspace solve_membership_system(const Matrix& constraints);
// Image of a subspace under a linear map given by its matrix (acting on columns).
Subspace image(const Matrix& map, const Subspace& u);

// Incrementally maintained RREF, used by closure computations.
class EchelonBuilder {
 public:
  EchelonBuilder(const FieldSpec& f, std::size_t ambient);
  explicit EchelonBuilder(const Subspace& start);
  // Returns true when v was independent of the rows collected so far.
  bool insert(std::span<const Scalar> v);
  bool contains(std::span<const Scalar> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Vector& row(std::size_t i) const { return rows_[i]; }
  Subspace finish() const;

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  void reduce_in_place(Vector& v) const;
};

}  // namespace nassoc
