#include "nassoc/algebra.hpp"

#include <deque>
#include <string>

namespace nassoc {

Algebra::Algebra(const FieldSpec& f, std::size_t dim)
    : field_(f), dim_(dim), table_(dim * dim, zero_vector(f, dim)) {
  build_operators();
}

Algebra::Algebra(const FieldSpec& f, std::size_t dim, std::vector<Vector> table,
                 std::vector<std::string> labels)
    : field_(f), dim_(dim), table_(std::move(table)), labels_(std::move(labels)) {
  if (table_.size() != dim * dim)
    fail(ErrorKind::Usage, "structure table has " + std::to_string(table_.size()) +
                               " entries, expected " + std::to_string(dim * dim));
  for (const auto& v : table_) {
    if (v.size() != dim) fail(ErrorKind::Usage, "structure constant vector has wrong length");
    for (const auto& s : v)
      if (s.field() != f) fail(ErrorKind::Usage, "structure constant from a different field");
  }
  if (!labels_.empty() && labels_.size() != dim)
    fail(ErrorKind::Usage, "basis label count does not match dimension");
  build_operators();
}

void Algebra::build_operators() {
  left_ops_.assign(dim_, Matrix(field_, dim_, dim_));
  right_ops_.assign(dim_, Matrix(field_, dim_, dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector& p = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        left_ops_[i](k, j) = p[k];   // e_i e_j
        right_ops_[j](k, i) = p[k];  // e_i e_j
      }
    }
}

std::string Algebra::label(std::size_t i) const {
  if (!labels_.empty()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

Algebra Algebra::with_product(std::size_t i, std::size_t j, Vector value) const {
  std::vector<Vector> t = table_;
  t.at(i * dim_ + j) = std::move(value);
  return Algebra(field_, dim_, std::move(t), labels_);
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const {
  return Algebra(field_, dim_, table_, std::move(labels));
}

bool is_element_of(const Algebra& A, std::span<const Scalar> a) {
  if (a.size() != A.dim()) return false;
  for (const auto& s : a)
    if (s.field() != A.field()) return false;
  return true;
}

namespace {

void require_element(const Algebra& A, std::span<const Scalar> a) {
  if (!is_element_of(A, a))
    fail(ErrorKind::Usage, "element does not belong to this algebra (dimension " +
                               std::to_string(A.dim()) + " over " + A.field().name() + ")");
}

void require_subspace(const Algebra& A, const Subspace& U) {
  if (U.ambient() != A.dim() || U.field() != A.field())
    fail(ErrorKind::Usage, "subspace does not live in this algebra");
}

}  // namespace

Element multiply(const Algebra& A, std::span<const Scalar> a, std::span<const Scalar> b) {
  require_element(A, a);
  require_element(A, b);
  const std::size_t n = A.dim();
  Element out = A.zero_element();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar coeff = a[i] * b[j];
      const Vector& p = A.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) out[k].add_product(coeff, p[k]);
    }
  }
  return out;
}

Element associator(const Algebra& A, std::span<const Scalar> x, std::span<const Scalar> y,
                   std::span<const Scalar> z) {
  Element xy_z = multiply(A, multiply(A, x, y), z);
  Element x_yz = multiply(A, x, multiply(A, y, z));
  for (std::size_t k = 0; k < xy_z.size(); ++k) xy_z[k] -= x_yz[k];
  return xy_z;
}

// ---------------------------------------------------------------------------
// Identities

std::string to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::RightCommutative: return "rightCommutative";
    case IdentityKind::LeftCommutative: return "leftCommutative";
    case IdentityKind::Bicommutative: return "bicommutative";
    case IdentityKind::LeftSymmetric: return "leftSymmetric";
    case IdentityKind::RightSymmetric: return "rightSymmetric";
    case IdentityKind::Assosymmetric: return "assosymmetric";
    case IdentityKind::NovikovLeft: return "novikovLeft";
    case IdentityKind::NovikovRight: return "novikovRight";
    case IdentityKind::Associative: return "associative";
    case IdentityKind::Commutative: return "commutative";
  }
  return "?";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view s) {
  for (auto k : kAllIdentityKinds)
    if (to_string(k) == s) return k;
  // Accept the kebab-case spellings used on the command line too.
  if (s == "right-commutative") return IdentityKind::RightCommutative;
  if (s == "left-commutative") return IdentityKind::LeftCommutative;
  if (s == "left-symmetric") return IdentityKind::LeftSymmetric;
  if (s == "right-symmetric") return IdentityKind::RightSymmetric;
  if (s == "novikov" || s == "novikov-left") return IdentityKind::NovikovLeft;
  if (s == "novikov-right") return IdentityKind::NovikovRight;
  return std::nullopt;
}

namespace {

// All basis products (e_i e_j) e_k and e_i (e_j e_k).
struct TripleProducts {
  std::size_t n;
  std::vector<Vector> left;   // (e_i e_j) e_k
  std::vector<Vector> right;  // e_i (e_j e_k)

  explicit TripleProducts(const Algebra& A) : n(A.dim()) {
    left.reserve(n * n * n);
    right.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          left.push_back(A.right_basis_operator(k).apply(A.basis_product(i, j)));
          right.push_back(A.left_basis_operator(i).apply(A.basis_product(j, k)));
        }
  }
  std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return (i * n + j) * n + k; }
  Vector assoc(std::size_t i, std::size_t j, std::size_t k) const {
    Vector v = left[at(i, j, k)];
    const Vector& r = right[at(i, j, k)];
    for (std::size_t m = 0; m < v.size(); ++m) v[m] -= r[m];
    return v;
  }
};

std::optional<IdentityWitness> primitive_witness(const Algebra& A, const TripleProducts& t,
                                                 IdentityKind kind) {
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        bool ok = true;
        switch (kind) {
          case IdentityKind::RightCommutative:
            ok = t.left[t.at(i, j, k)] == t.left[t.at(i, k, j)];
            break;
          case IdentityKind::LeftCommutative:
            ok = t.right[t.at(i, j, k)] == t.right[t.at(j, i, k)];
            break;
          case IdentityKind::LeftSymmetric:
            ok = t.assoc(i, j, k) == t.assoc(j, i, k);
            break;
          case IdentityKind::RightSymmetric:
            ok = t.assoc(i, j, k) == t.assoc(i, k, j);
            break;
          case IdentityKind::Associative:
            ok = t.left[t.at(i, j, k)] == t.right[t.at(i, j, k)];
            break;
          case IdentityKind::Commutative:
            ok = k != 0 || A.basis_product(i, j) == A.basis_product(j, i);
            break;
          default:
            break;
        }
        if (!ok) return IdentityWitness{kind, i, j, k};
      }
  return std::nullopt;
}

std::vector<IdentityKind> components(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Bicommutative:
      return {IdentityKind::RightCommutative, IdentityKind::LeftCommutative};
    case IdentityKind::Assosymmetric:
      return {IdentityKind::LeftSymmetric, IdentityKind::RightSymmetric};
    case IdentityKind::NovikovLeft:
      return {IdentityKind::LeftSymmetric, IdentityKind::RightCommutative};
    case IdentityKind::NovikovRight:
      return {IdentityKind::RightSymmetric, IdentityKind::LeftCommutative};
    default:
      return {kind};
  }
}

}  // namespace

std::optional<IdentityWitness> identity_witness(const Algebra& A, IdentityKind kind) {
  TripleProducts t(A);
  for (auto part : components(kind))
    if (auto w = primitive_witness(A, t, part)) return w;
  return std::nullopt;
}

bool check_identity(const Algebra& A, IdentityKind kind) {
  return !identity_witness(A, kind).has_value();
}

bool check_assosymmetric_all_permutations(const Algebra& A) {
  TripleProducts t(A);
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector base = t.assoc(i, j, k);
        const std::array<std::array<std::size_t, 3>, 5> perms = {{
            {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
        for (const auto& p : perms)
          if (t.assoc(p[0], p[1], p[2]) != base) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Subspace-level operations

Subspace subspace_product(const Algebra& A, const Subspace& U, const Subspace& V) {
  require_subspace(A, U);
  require_subspace(A, V);
  EchelonBuilder b(A.field(), A.dim());
  for (std::size_t r = 0; r < U.dim(); ++r)
    for (std::size_t s = 0; s < V.dim(); ++s) {
      b.insert(multiply(A, U.basis().row(r), V.basis().row(s)));
      if (b.dim() == A.dim()) return b.finish();
    }
  return b.finish();
}

Subspace square(const Algebra& A, const Subspace& U) { return subspace_product(A, U, U); }

bool is_subalgebra(const Algebra& A, const Subspace& U) {
  require_subspace(A, U);
  for (std::size_t r = 0; r < U.dim(); ++r)
    for (std::size_t s = 0; s < U.dim(); ++s)
      if (!U.contains(multiply(A, U.basis().row(r), U.basis().row(s)))) return false;
  return true;
}

namespace {

bool closed_under(const Algebra& A, const Subspace& U, bool left, bool right) {
  require_subspace(A, U);
  for (std::size_t r = 0; r < U.dim(); ++r) {
    auto u = U.basis().row(r);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (left && !U.contains(A.left_basis_operator(i).apply(u))) return false;
      if (right && !U.contains(A.right_basis_operator(i).apply(u))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_ideal(const Algebra& A, const Subspace& U) { return closed_under(A, U, true, true); }
bool is_left_ideal(const Algebra& A, const Subspace& U) { return closed_under(A, U, true, false); }
bool is_right_ideal(const Algebra& A, const Subspace& U) { return closed_under(A, U, false, true); }

Subspace subalgebra_closure(const Algebra& A, const std::vector<Vector>& generators) {
  Subspace S = span(generators, A.dim(), A.field());
  for (;;) {
    Subspace next = subspace_sum(S, square(A, S));
    if (next == S) return S;
    S = std::move(next);
  }
}

Subspace ideal_closure(const Algebra& A, const std::vector<Vector>& generators) {
  EchelonBuilder b(A.field(), A.dim());
  std::deque<Vector> pending;
  for (const auto& g : generators) {
    require_element(A, g);
    if (b.insert(g)) pending.push_back(g);
  }
  while (!pending.empty() && b.dim() < A.dim()) {
    Vector w = std::move(pending.front());
    pending.pop_front();
    for (std::size_t i = 0; i < A.dim(); ++i) {
      Vector l = A.left_basis_operator(i).apply(w);
      if (b.insert(l)) pending.push_back(std::move(l));
      Vector r = A.right_basis_operator(i).apply(w);
      if (b.insert(r)) pending.push_back(std::move(r));
    }
  }
  return b.finish();
}

Subspace ideal_closure(const Algebra& A, const Subspace& generators) {
  return ideal_closure(A, generators.basis_vectors());
}

namespace {

// Kernel of the linear conditions a -> residue(f(a)) mod `target`, stacked
// over all maps in `maps`. Each map is given as a matrix acting on a.
Subspace joint_kernel(const Algebra& A, const std::vector<Matrix>& maps, const Subspace& target) {
  const std::size_t n = A.dim();
  Matrix constraints(A.field(), 0, n);
  auto free_cols = target.free_columns();
  for (const auto& m : maps) {
    // Column j of m is the image of e_j; reduce each column modulo target.
    std::vector<Vector> reduced_cols;
    for (std::size_t j = 0; j < n; ++j) reduced_cols.push_back(target.reduce(m.column(j)));
    for (std::size_t c : free_cols) {
      Vector row;
      row.reserve(n);
      for (std::size_t j = 0; j < n; ++j) row.push_back(reduced_cols[j][c]);
      if (!is_zero_vector(row)) constraints.append_row(row);
    }
  }
  return solve_membership_system(constraints);
}

// Matrix of a -> a b (left = true) or a -> b a, for fixed b.
Matrix multiplication_by(const Algebra& A, std::span<const Scalar> b, bool a_on_left) {
  return mul_operator(A, b, a_on_left ? Side::Right : Side::Left).matrix;
}

}  // namespace

Subspace idealizer(const Algebra& A, const Subspace& B) {
  require_subspace(A, B);
  std::vector<Matrix> maps;
  for (std::size_t r = 0; r < B.dim(); ++r) {
    maps.push_back(multiplication_by(A, B.basis().row(r), true));
    maps.push_back(multiplication_by(A, B.basis().row(r), false));
  }
  return joint_kernel(A, maps, B);
}

Subspace annihilator(const Algebra& A, const Subspace& B) {
  return subspace_intersect(left_annihilator(A, B), right_annihilator(A, B));
}

Subspace left_annihilator(const Algebra& A, const Subspace& B) {
  require_subspace(A, B);
  std::vector<Matrix> maps;
  for (std::size_t r = 0; r < B.dim(); ++r) maps.push_back(multiplication_by(A, B.basis().row(r), true));
  return joint_kernel(A, maps, A.zero_subspace());
}

Subspace right_annihilator(const Algebra& A, const Subspace& B) {
  require_subspace(A, B);
  std::vector<Matrix> maps;
  for (std::size_t r = 0; r < B.dim(); ++r) maps.push_back(multiplication_by(A, B.basis().row(r), false));
  return joint_kernel(A, maps, A.zero_subspace());
}

// ---------------------------------------------------------------------------
// Quotients and restrictions

Vector Quotient::project(std::span<const Scalar> v) const { return ideal.residue_coords(v); }

Vector Quotient::lift(std::span<const Scalar> w) const {
  Vector v = zero_vector(ideal.field(), ideal.ambient());
  for (std::size_t t = 0; t < kept.size(); ++t) v[kept[t]] = w[t];
  return v;
}

Subspace Quotient::project(const Subspace& U) const {
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < U.dim(); ++r) gens.push_back(project(U.basis().row(r)));
  return span(gens, kept.size(), ideal.field());
}

Subspace Quotient::preimage(const Subspace& W) const {
  EchelonBuilder b(ideal);
  for (std::size_t r = 0; r < W.dim(); ++r) b.insert(lift(W.basis().row(r)));
  return b.finish();
}

Quotient quotient(const Algebra& A, const Subspace& I) {
  require_subspace(A, I);
  if (!is_ideal(A, I)) fail(ErrorKind::Usage, "quotient by a subspace that is not an ideal");
  auto kept = I.free_columns();
  const std::size_t m = kept.size();
  std::vector<Vector> table;
  table.reserve(m * m);
  for (std::size_t a : kept)
    for (std::size_t b : kept) table.push_back(I.residue_coords(A.basis_product(a, b)));
  std::vector<std::string> labels;
  if (!A.labels().empty())
    for (std::size_t a : kept) labels.push_back(A.labels()[a]);
  return Quotient{Algebra(A.field(), m, std::move(table), std::move(labels)), I, std::move(kept)};
}

Vector Restriction::embed(std::span<const Scalar> coords) const {
  return combination(subalgebra, coords);
}

Subspace Restriction::embed(const Subspace& W) const {
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < W.dim(); ++r) gens.push_back(embed(W.basis().row(r)));
  return span(gens, subalgebra.ambient(), subalgebra.field());
}

Vector Restriction::coordinates(std::span<const Scalar> v) const { return subalgebra.coordinates(v); }

Subspace Restriction::pull(const Subspace& W) const {
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < W.dim(); ++r) gens.push_back(coordinates(W.basis().row(r)));
  return span(gens, subalgebra.dim(), subalgebra.field());
}

Restriction restrict_to(const Algebra& A, const Subspace& U) {
  require_subspace(A, U);
  if (!is_subalgebra(A, U)) fail(ErrorKind::Usage, "restriction to a subspace that is not a subalgebra");
  const std::size_t d = U.dim();
  std::vector<Vector> table;
  table.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s)
      table.push_back(U.coordinates(multiply(A, U.basis().row(r), U.basis().row(s))));
  return Restriction{Algebra(A.field(), d, std::move(table)), U};
}

Algebra opposite(const Algebra& A) {
  const std::size_t n = A.dim();
  std::vector<Vector> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(A.basis_product(j, i));
  return Algebra(A.field(), n, std::move(table), A.labels());
}

Algebra direct_sum(const Algebra& A, const Algebra& B) {
  if (A.field() != B.field()) fail(ErrorKind::Usage, "direct sum across fields");
  const std::size_t n = A.dim(), m = B.dim(), d = n + m;
  std::vector<Vector> table(d * d, zero_vector(A.field(), d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table[i * d + j][k] = A.basis_product(i, j)[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) table[(n + i) * d + n + j][n + k] = B.basis_product(i, j)[k];
  std::vector<std::string> labels;
  if (!A.labels().empty() || !B.labels().empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(A.label(i));
    for (std::size_t i = 0; i < m; ++i) labels.push_back(B.label(i) + "'");
  }
  return Algebra(A.field(), d, std::move(table), std::move(labels));
}

// ---------------------------------------------------------------------------
// Multiplication operators

MulOperator mul_operator(const Algebra& A, std::span<const Scalar> a, Side side) {
  require_element(A, a);
  const std::size_t n = A.dim();
  Matrix m(A.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    // right: x -> x a = sum a_i x e_i, i.e. sum a_i R_i; left uses L_i.
    const Matrix& op = side == Side::Right ? A.right_basis_operator(i) : A.left_basis_operator(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!op(r, c).is_zero()) m(r, c).add_product(a[i], op(r, c));
  }
  return MulOperator{side, Element(a.begin(), a.end()), std::move(m)};
}

namespace {

Matrix power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace

Subspace fitting_component(const Algebra& A, std::span<const Scalar> a, Side side) {
  MulOperator op = mul_operator(A, a, side);
  return solve_membership_system(power(op.matrix, A.dim()));
}

bool acts_nilpotently(const Algebra& A, std::span<const Scalar> a, Side side) {
  MulOperator op = mul_operator(A, a, side);
  return power(op.matrix, A.dim()).is_zero();
}

namespace {

bool is_nil(const Algebra& A, std::span<const Scalar> a, Side side) {
  require_element(A, a);
  Element x(a.begin(), a.end());
  for (std::size_t step = 0; step <= A.dim() + 1; ++step) {
    if (is_zero_vector(x)) return true;
    x = side == Side::Right ? multiply(A, x, a) : multiply(A, a, x);
  }
  return is_zero_vector(x);
}

}  // namespace

bool is_right_nil(const Algebra& A, std::span<const Scalar> a) { return is_nil(A, a, Side::Right); }
bool is_left_nil(const Algebra& A, std::span<const Scalar> a) { return is_nil(A, a, Side::Left); }

}  // namespace nassoc
