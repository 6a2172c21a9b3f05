#include "nassoc/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nassoc/series.hpp"

namespace nassoc {

void require_finite_field(const FieldSpec& f, std::string_view operation) {
  if (!f.is_finite())
    fail(ErrorKind::Unsupported, std::string(operation) + " requires enumeration, which requires a finite field (got " +
                                     f.name() + ")");
}

std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > cap / q) return std::nullopt;
    v *= q;
  }
  if (v > cap) return std::nullopt;
  return v;
}

std::uint64_t subspace_count(std::uint64_t q, std::size_t n, std::uint64_t cap) {
  // Gaussian binomials via the recurrence G(n, k) = G(n-1, k-1) + q^k G(n-1, k).
  const std::uint64_t sat = cap + 1;
  auto sat_add = [&](std::uint64_t a, std::uint64_t b) { return std::min(sat, a + b); };
  auto sat_mul = [&](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > sat / a) return sat;
    return std::min(sat, a * b);
  };
  std::vector<std::uint64_t> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      std::uint64_t a = k >= 1 ? row[k - 1] : 0;
      std::uint64_t b = k < row.size() ? sat_mul(qk, row[k]) : 0;
      next[k] = sat_add(a, b);
      qk = sat_mul(qk, q);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : row) total = sat_add(total, c);
  return total;
}

namespace {

void require_vector_budget(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget,
                           std::string_view what) {
  require_finite_field(f, what);
  if (!bounded_power(f.order(), n, budget.max_vectors))
    fail(ErrorKind::Unsupported, std::string(what) + ": " + std::to_string(f.order()) + "^" +
                                     std::to_string(n) + " vectors exceed the budget of " +
                                     std::to_string(budget.max_vectors));
}

// Advances residues in `digits` (last position fastest); false on wraparound.
bool odometer_step(std::vector<std::uint32_t>& digits, std::uint32_t q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

void for_each_vector(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget,
                     const std::function<void(const Vector&)>& visit) {
  require_vector_budget(f, n, budget, "vector enumeration");
  std::vector<std::uint32_t> digits(n, 0);
  Vector v = zero_vector(f, n);
  do {
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::residue(f, digits[i]);
    visit(v);
  } while (odometer_step(digits, f.p()));
}

void for_each_projective_vector(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget,
                                const std::function<void(const Vector&)>& visit) {
  require_vector_budget(f, n, budget, "vector enumeration");
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::uint32_t> digits(n - lead - 1, 0);
    Vector v = zero_vector(f, n);
    v[lead] = Scalar::one(f);
    do {
      for (std::size_t i = 0; i < digits.size(); ++i) v[lead + 1 + i] = Scalar::residue(f, digits[i]);
      visit(v);
    } while (odometer_step(digits, f.p()));
  }
}

void for_each_vector_in(const Subspace& U, const EnumerationBudget& budget,
                        const std::function<void(const Vector&)>& visit) {
  const FieldSpec f = U.field();
  require_vector_budget(f, U.dim(), budget, "vector enumeration");
  std::vector<std::uint32_t> digits(U.dim(), 0);
  Vector coeffs = zero_vector(f, U.dim());
  do {
    for (std::size_t r = 0; r < U.dim(); ++r) coeffs[r] = Scalar::residue(f, digits[r]);
    visit(combination(U, coeffs));
  } while (odometer_step(digits, f.p()));
}

void for_each_subspace(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget,
                       const std::function<bool(const Subspace&)>& visit) {
  require_finite_field(f, "subspace enumeration");
  std::uint64_t count = subspace_count(f.order(), n, budget.max_subspaces);
  if (count > budget.max_subspaces)
    fail(ErrorKind::Unsupported, "subspace enumeration of " + f.name() + "^" + std::to_string(n) +
                                     " exceeds the budget of " + std::to_string(budget.max_subspaces) +
                                     " subspaces");
  const std::uint32_t q = f.p();
  for (std::size_t k = 0; k <= n; ++k) {
    // Pivot sets in lexicographic order.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
      std::vector<bool> is_pivot(n, false);
      for (auto c : piv) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;  // (row, col)
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free_pos.emplace_back(r, c);
      std::vector<std::uint32_t> digits(free_pos.size(), 0);
      do {
        Matrix m(f, k, n);
        for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = Scalar::one(f);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          if (digits[t]) m(free_pos[t].first, free_pos[t].second) = Scalar::residue(f, digits[t]);
        if (!visit(Subspace::from_rref(std::move(m)))) return;
      } while (odometer_step(digits, q));
      // Next combination.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

std::vector<Subspace> all_subspaces(const FieldSpec& f, std::size_t n, const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for_each_subspace(f, n, budget, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Subspace> subspaces_of(const Subspace& U, const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for_each_subspace(U.field(), U.dim(), budget, [&](const Subspace& s) {
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < s.dim(); ++r) gens.push_back(combination(U, s.basis().row(r)));
    out.push_back(span(gens, U.ambient(), U.field()));
    return true;
  });
  return out;
}

void for_each_complement(const Subspace& V, const Subspace& W, const EnumerationBudget& budget,
                         const std::function<bool(const Subspace&)>& visit) {
  require_finite_field(V.field(), "complement search");
  require_compatible(V, W);
  if (!V.contains(W)) fail(ErrorKind::Usage, "complement search: W is not inside V");
  const FieldSpec f = V.field();
  // Work in the coordinates of V's basis.
  std::vector<Vector> w_coords;
  for (std::size_t r = 0; r < W.dim(); ++r) w_coords.push_back(V.coordinates(W.basis().row(r)));
  Subspace w_local = span(w_coords, V.dim(), f);
  auto free_cols = w_local.free_columns();
  const std::size_t k = free_cols.size(), m = w_local.dim();
  if (!bounded_power(f.order(), k * m, budget.max_subspaces))
    fail(ErrorKind::Unsupported, "complement search over " + std::to_string(f.order()) + "^" +
                                     std::to_string(k * m) + " candidates exceeds the subspace budget");
  std::vector<std::uint32_t> digits(k * m, 0);
  do {
    std::vector<Vector> gens;
    for (std::size_t t = 0; t < k; ++t) {
      Vector local = unit_vector(f, V.dim(), free_cols[t]);
      for (std::size_t s = 0; s < m; ++s) {
        std::uint32_t d = digits[t * m + s];
        if (!d) continue;
        Scalar c = Scalar::residue(f, d);
        auto row = w_local.basis().row(s);
        for (std::size_t j = 0; j < local.size(); ++j) local[j].add_product(c, row[j]);
      }
      gens.push_back(combination(V, local));
    }
    if (!visit(span(gens, V.ambient(), f))) return;
  } while (odometer_step(digits, f.p()));
}

namespace {

// Ideal closures over F_p on raw residues. The enumerations below call this
// once per line of F_p^n, so it avoids the generic Scalar path.
class ResidueClosure {
 public:
  explicit ResidueClosure(const Algebra& A) : p_(A.field().p()), n_(A.dim()), left_(n_), right_(n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const Vector& c = A.basis_product(i, j);
        for (std::size_t k = 0; k < n_; ++k)
          if (!c[k].is_zero()) {
            left_[i].push_back({j, k, c[k].residue()});   // e_i e_j
            right_[j].push_back({i, k, c[k].residue()});  // e_i e_j seen as e_i times e_j on the right
          }
      }
  }

  // Echelon rows of the ideal generated by v.
  const std::vector<std::vector<std::uint32_t>>& close(const Vector& v) {
    rows_.clear();
    pivots_.clear();
    std::vector<std::uint32_t> w(n_);
    for (std::size_t k = 0; k < n_; ++k) w[k] = v[k].residue();
    std::size_t next = 0;
    insert(std::move(w));
    std::vector<std::uint64_t> acc(n_);
    while (next < rows_.size() && rows_.size() < n_) {
      const std::vector<std::uint32_t> src = rows_[next++];
      for (std::size_t i = 0; i < n_ && rows_.size() < n_; ++i)
        for (const auto* terms : {&left_[i], &right_[i]}) {
          std::fill(acc.begin(), acc.end(), 0);
          bool any = false;
          for (const auto& t : *terms)
            if (src[t.j]) {
              acc[t.k] = (acc[t.k] + std::uint64_t(src[t.j]) * t.c) % p_;
              any = true;
            }
          if (!any) continue;
          std::vector<std::uint32_t> prod(n_);
          for (std::size_t k = 0; k < n_; ++k) prod[k] = std::uint32_t(acc[k]);
          insert(std::move(prod));
        }
    }
    return rows_;
  }

  Subspace subspace(const FieldSpec& f) const {
    std::vector<Vector> gens;
    for (const auto& r : rows_) {
      Vector v = zero_vector(f, n_);
      for (std::size_t k = 0; k < n_; ++k)
        if (r[k]) v[k] = Scalar::residue(f, r[k]);
      gens.push_back(std::move(v));
    }
    return span(gens, n_, f);
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  struct Term {
    std::size_t j, k;
    std::uint32_t c;
  };
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::vector<Term>> left_, right_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;

  std::uint32_t inverse(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return std::uint32_t(r);
  }

  // Rows are kept monic and reduced against every earlier pivot, so a single
  // pass in insertion order reduces a new vector.
  void insert(std::vector<std::uint32_t> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint32_t c = v[pivots_[r]];
      if (!c) continue;
      const auto& row = rows_[r];
      for (std::size_t k = 0; k < n_; ++k)
        if (row[k]) v[k] = std::uint32_t((v[k] + std::uint64_t(p_ - c) * row[k]) % p_);
    }
    std::size_t piv = 0;
    while (piv < n_ && !v[piv]) ++piv;
    if (piv == n_) return;
    std::uint32_t inv = inverse(v[piv]);
    for (auto& x : v) x = std::uint32_t(std::uint64_t(x) * inv % p_);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
  }
};

}  // namespace

std::vector<Subspace> all_ideals(const Algebra& A, const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for_each_subspace(A.field(), A.dim(), budget, [&](const Subspace& s) {
    if (is_ideal(A, s)) out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Subspace> all_subalgebras(const Algebra& A, const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for_each_subspace(A.field(), A.dim(), budget, [&](const Subspace& s) {
    if (is_subalgebra(A, s)) out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Subspace> minimal_ideals(const Algebra& A, const EnumerationBudget& budget) {
  require_finite_field(A.field(), "minimal ideal enumeration");
  std::set<Subspace> closures;
  ResidueClosure closer(A);
  for_each_projective_vector(A.field(), A.dim(), budget, [&](const Vector& v) {
    closer.close(v);
    closures.insert(closer.subspace(A.field()));
  });
  // A closure is minimal iff no other closure lies strictly inside it; the
  // set is ordered by dimension first.
  std::vector<Subspace> out;
  for (const auto& c : closures) {
    bool minimal = true;
    for (const auto& m : out)
      if (c.contains(m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

Subspace socle(const Algebra& A, const EnumerationBudget& budget) {
  Subspace s = A.zero_subspace();
  for (const auto& m : minimal_ideals(A, budget)) s = subspace_sum(s, m);
  return s;
}

std::vector<Subspace> minimal_zero_ideals(const Algebra& A, const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for (auto& m : minimal_ideals(A, budget))
    if (square(A, m).is_zero()) out.push_back(std::move(m));
  return out;
}

Subspace zero_socle(const Algebra& A, const EnumerationBudget& budget) {
  Subspace s = A.zero_subspace();
  for (const auto& m : minimal_zero_ideals(A, budget)) s = subspace_sum(s, m);
  return s;
}

std::vector<Subspace> maximal_subalgebras(const Algebra& A, const EnumerationBudget& budget) {
  require_finite_field(A.field(), "maximal subalgebra enumeration");
  std::vector<Subspace> proper;
  for_each_subspace(A.field(), A.dim(), budget, [&](const Subspace& s) {
    if (!s.is_full() && is_subalgebra(A, s)) proper.push_back(s);
    return true;
  });
  // Enumeration order is by ascending dimension; walk from the top.
  std::vector<Subspace> maximal;
  for (auto it = proper.rbegin(); it != proper.rend(); ++it) {
    bool covered = false;
    for (const auto& m : maximal)
      if (m.dim() > it->dim() && m.contains(*it)) {
        covered = true;
        break;
      }
    if (!covered) {
      // A non-maximal subalgebra sits inside some maximal one, and every
      // maximal one seen so far has dimension >= this one.
      maximal.push_back(*it);
    }
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

Subspace ideal_core(const Algebra& A, const Subspace& S) {
  if (S.ambient() != A.dim() || S.field() != A.field())
    fail(ErrorKind::Usage, "subspace does not live in this algebra");
  Subspace K = S;
  for (;;) {
    if (is_ideal(A, K)) return K;
    // x = sum c_r k_r with e_i x, x e_i in K for all i.
    const std::size_t d = K.dim();
    Matrix constraints(A.field(), 0, d);
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (const Matrix* op : {&A.left_basis_operator(i), &A.right_basis_operator(i)}) {
        std::vector<Vector> residues;
        for (std::size_t r = 0; r < d; ++r) residues.push_back(K.residue_coords(op->apply(K.basis().row(r))));
        const std::size_t m = residues.empty() ? 0 : residues.front().size();
        for (std::size_t c = 0; c < m; ++c) {
          Vector row;
          for (std::size_t r = 0; r < d; ++r) row.push_back(residues[r][c]);
          if (!is_zero_vector(row)) constraints.append_row(row);
        }
      }
    Subspace coeffs = solve_membership_system(constraints);
    std::vector<Vector> gens;
    for (std::size_t t = 0; t < coeffs.dim(); ++t) gens.push_back(combination(K, coeffs.basis().row(t)));
    K = span(gens, A.dim(), A.field());
  }
}

FrattiniResult frattini_from(const Algebra& A, const std::vector<Subspace>& maximal) {
  Subspace F = A.whole();
  for (const auto& m : maximal) F = subspace_intersect(F, m);
  return FrattiniResult{F, ideal_core(A, F)};
}

FrattiniResult frattini(const Algebra& A, const EnumerationBudget& budget) {
  return frattini_from(A, maximal_subalgebras(A, budget));
}

std::string to_string(RadicalKind k) {
  switch (k) {
    case RadicalKind::Solvable: return "solvable";
    case RadicalKind::Nilpotent: return "nil";
    case RadicalKind::RightNil: return "right-nil";
    case RadicalKind::LeftNil: return "left-nil";
  }
  return "?";
}

std::optional<RadicalKind> parse_radical_kind(std::string_view s) {
  if (s == "solvable") return RadicalKind::Solvable;
  if (s == "nil" || s == "nilpotent") return RadicalKind::Nilpotent;
  if (s == "right-nil" || s == "rightNil") return RadicalKind::RightNil;
  if (s == "left-nil" || s == "leftNil") return RadicalKind::LeftNil;
  return std::nullopt;
}

bool in_natural_class(const Algebra& A) {
  return check_identity(A, IdentityKind::Bicommutative) || check_identity(A, IdentityKind::Assosymmetric) ||
         check_identity(A, IdentityKind::NovikovLeft) || check_identity(A, IdentityKind::NovikovRight);
}

namespace {

// Property of an ideal C of A, viewed as an algebra.
bool ideal_has_property(const Algebra& A, const Subspace& C, RadicalKind kind) {
  Subspace t = C;
  switch (kind) {
    case RadicalKind::Solvable:
      while (!t.is_zero()) {
        Subspace next = square(A, t);
        if (next == t) return false;
        t = std::move(next);
      }
      return true;
    case RadicalKind::RightNil:
    case RadicalKind::LeftNil:
      while (!t.is_zero()) {
        Subspace next = kind == RadicalKind::RightNil ? subspace_product(A, t, C) : subspace_product(A, C, t);
        if (next == t) return false;
        t = std::move(next);
      }
      return true;
    case RadicalKind::Nilpotent:
      return is_nilpotent(restrict_to(A, C).algebra);
  }
  return false;
}

}  // namespace

Subspace radical(const Algebra& A, RadicalKind kind, const EnumerationBudget& budget,
                 bool require_natural_class) {
  require_finite_field(A.field(), "radical computation");
  if (kind != RadicalKind::Solvable && require_natural_class && !in_natural_class(A))
    fail(ErrorKind::Refused, "the " + to_string(kind) +
                                 " radical is only guaranteed to exist for bicommutative, assosymmetric "
                                 "or Novikov algebras");
  if (ideal_has_property(A, A.whole(), kind)) return A.whole();
  EchelonBuilder acc(A.field(), A.dim());
  ResidueClosure closer(A);
  std::set<Subspace> rejected;
  for_each_projective_vector(A.field(), A.dim(), budget, [&](const Vector& v) {
    if (acc.contains(v)) return;
    if (closer.close(v).size() == A.dim()) return;
    Subspace c = closer.subspace(A.field());
    if (rejected.count(c)) return;
    if (!ideal_has_property(A, c, kind)) {
      rejected.insert(std::move(c));
      return;
    }
    for (std::size_t r = 0; r < c.dim(); ++r) acc.insert(c.basis().row(r));
  });
  return acc.finish();
}

bool is_semisimple(const Algebra& A, const EnumerationBudget& budget) {
  return radical(A, RadicalKind::Solvable, budget).is_zero();
}

}  // namespace nassoc
