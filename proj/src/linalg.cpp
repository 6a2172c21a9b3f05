#include "nassoc/linalg.hpp"

#include <algorithm>
#include <string>

namespace nassoc {

Vector zero_vector(const FieldSpec& f, std::size_t n) {
  return Vector(n, Scalar::zero(f));
}

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::strong_ordering compare_vectors(std::span<const Scalar> a, std::span<const Scalar> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::append_row(std::span<const Scalar> r) {
  if (r.size() != cols_)
    fail(ErrorKind::Usage, "row of length " + std::to_string(r.size()) +
                               " appended to matrix with " + std::to_string(cols_) + " columns");
  for (const auto& s : r)
    if (s.field() != field_) fail(ErrorKind::Usage, "row entry from a different field");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t rows) {
  if (rows >= rows_) return;
  rows_ = rows;
  data_.resize(rows * cols_, Scalar::zero(field_));
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) fail(ErrorKind::Usage, "matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) out[r].add_product((*this)(r, c), v[c]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::Usage, "matrix product size mismatch");
  if (field_ != o.field_) fail(ErrorKind::Usage, "matrix product across fields");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j).add_product(a, o(k, j));
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return is_zero_vector(data_); }

namespace {

// In-place Gauss-Jordan; returns pivot columns. Zero rows end up at the bottom.
std::vector<std::size_t> gauss_jordan(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  const FieldSpec f = m.field();
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pick = lead_row;
    while (pick < m.rows() && m(pick, c).is_zero()) ++pick;
    if (pick == m.rows()) continue;
    if (pick != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pick, j), m(lead_row, j));
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar factor = -m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j).add_product(factor, m(lead_row, j));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  (void)f;
  return pivots;
}

}  // namespace

Matrix rref(Matrix m) {
  auto pivots = gauss_jordan(m);
  m.truncate_rows(pivots.size());
  return m;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto row = basis_.row(r);
    std::size_t c = 0;
    while (c < row.size() && row[c].is_zero()) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  return Subspace(Matrix::identity(f, ambient));
}

Subspace Subspace::from_rref(Matrix reduced) { return Subspace(std::move(reduced)); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient()) fail(ErrorKind::Usage, "vector length does not match subspace ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar& lead = out[pivots_[r]];
    if (lead.is_zero()) continue;
    Scalar factor = -lead;
    auto row = basis_.row(r);
    for (std::size_t c = pivots_[r]; c < out.size(); ++c) out[c].add_product(factor, row[c]);
  }
  return out;
}

Vector Subspace::residue_coords(std::span<const Scalar> v) const {
  Vector reduced = reduce(v);
  Vector out;
  for (std::size_t c : free_columns()) out.push_back(reduced[c]);
  return out;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) fail(ErrorKind::Usage, "vector is not in the subspace");
  Vector out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(v[pivots_[r]]);
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  require_compatible(*this, o);
  if (o.dim() > dim()) return false;
  for (std::size_t r = 0; r < o.dim(); ++r)
    if (!contains(o.basis_.row(r))) return false;
  return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  for (std::size_t r = 0; r < a.dim(); ++r)
    if (auto c = compare_vectors(a.basis_.row(r), b.basis_.row(r)); c != 0) return c;
  return std::strong_ordering::equal;
}

void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    fail(ErrorKind::Usage, "subspaces of F^" + std::to_string(u.ambient()) + " and F^" +
                               std::to_string(v.ambient()) + " combined");
  if (u.field() != v.field()) fail(ErrorKind::Usage, "subspaces over different fields combined");
}

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient, const FieldSpec& f) {
  Matrix m(f, 0, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient)
      fail(ErrorKind::Usage, "vector of length " + std::to_string(v.size()) +
                                 " in span over F^" + std::to_string(ambient));
    m.append_row(v);
  }
  return Subspace::from_rref(rref(std::move(m)));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (u.contains(v)) return u;
  if (v.contains(u)) return v;
  EchelonBuilder b(u);
  for (std::size_t r = 0; r < v.dim(); ++r) b.insert(v.basis().row(r));
  return b.finish();
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  if (u.contains(v)) return v;
  if (v.contains(u)) return u;
  // x = sum c_r u_r lies in v iff the residues of the u_r modulo v combine to 0.
  auto free_cols = v.free_columns();
  Matrix m(u.field(), free_cols.size(), u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Vector res = v.residue_coords(u.basis().row(r));
    for (std::size_t i = 0; i < res.size(); ++i) m(i, r) = res[i];
  }
  Subspace coeffs = solve_membership_system(m);
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < coeffs.dim(); ++k) gens.push_back(combination(u, coeffs.basis().row(k)));
  return span(gens, u.ambient(), u.field());
}

Vector combination(const Subspace& U, std::span<const Scalar> coeffs) {
  if (coeffs.size() != U.dim()) fail(ErrorKind::Usage, "coefficient count does not match subspace dimension");
  Vector x = zero_vector(U.field(), U.ambient());
  for (std::size_t r = 0; r < U.dim(); ++r) {
    const Scalar& c = coeffs[r];
    if (c.is_zero()) continue;
    auto row = U.basis().row(r);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!row[j].is_zero()) x[j].add_product(c, row[j]);
  }
  return x;
}

bool contains(const Subspace& u, std::span<const Scalar> x) { return u.contains(x); }
bool contains(const Subspace& u, const Subspace& v) { return u.contains(v); }

Subspace solve_membership_system(const Matrix& constraints) {
  Matrix m = constraints;
  auto pivots = gauss_jordan(m);
  const FieldSpec f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(f, n);
    x[free] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    gens.push_back(std::move(x));
  }
  return span(gens, n, f);
}

Subspace image(const Matrix& map, const Subspace& u) {
  if (map.cols() != u.ambient()) fail(ErrorKind::Usage, "map does not act on the subspace");
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < u.dim(); ++r) gens.push_back(map.apply(u.basis().row(r)));
  return span(gens, map.rows(), map.field());
}

// ---------------------------------------------------------------------------
// EchelonBuilder

EchelonBuilder::EchelonBuilder(const FieldSpec& f, std::size_t ambient)
    : field_(f), ambient_(ambient) {}

EchelonBuilder::EchelonBuilder(const Subspace& start)
    : field_(start.field()), ambient_(start.ambient()) {
  rows_ = start.basis_vectors();
  pivots_ = start.pivots();
}

void EchelonBuilder::reduce_in_place(Vector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& lead = v[pivots_[r]];
    if (lead.is_zero()) continue;
    Scalar factor = -lead;
    const Vector& row = rows_[r];
    for (std::size_t c = pivots_[r]; c < ambient_; ++c)
      if (!row[c].is_zero()) v[c].add_product(factor, row[c]);
  }
}

bool EchelonBuilder::contains(std::span<const Scalar> v) const {
  Vector w(v.begin(), v.end());
  reduce_in_place(w);
  return is_zero_vector(w);
}

bool EchelonBuilder::insert(std::span<const Scalar> v) {
  if (v.size() != ambient_) fail(ErrorKind::Usage, "vector length does not match echelon ambient dimension");
  Vector w(v.begin(), v.end());
  reduce_in_place(w);
  std::size_t p = 0;
  while (p < ambient_ && w[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = w[p].inverse();
  for (std::size_t c = p; c < ambient_; ++c) w[c] *= inv;
  // Keep the collected rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar factor = -row[p];
    for (std::size_t c = p; c < ambient_; ++c)
      if (!w[c].is_zero()) row[c].add_product(factor, w[c]);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

Subspace EchelonBuilder::finish() const {
  Matrix m(field_, 0, ambient_);
  for (const auto& r : rows_) m.append_row(r);
  return Subspace::from_rref(std::move(m));
}

}  // namespace nassoc
