#include "nassoc/corpus.hpp"

#include <random>

#include "nassoc/series.hpp"

namespace nassoc {

namespace {

using IK = IdentityKind;

// Builds a table from entries (i, j, k, c) meaning e_i e_j += c e_k.
Algebra from_entries(const FieldSpec& f, std::size_t n, std::initializer_list<std::array<long, 4>> entries,
                     std::vector<std::string> labels = {}) {
  std::vector<Vector> table(n * n, zero_vector(f, n));
  for (const auto& [i, j, k, c] : entries) table[i * n + j][k] += Scalar::from_int(f, c);
  return Algebra(f, n, std::move(table), std::move(labels));
}

std::map<IK, bool> all_identities() {
  std::map<IK, bool> m;
  for (IK k : kAllIdentityKinds) m[k] = true;
  return m;
}

Subspace span_of(const Algebra& A, std::initializer_list<std::size_t> basis) {
  std::vector<Vector> vs;
  for (std::size_t i : basis) vs.push_back(A.basis_element(i));
  return span(vs, A.dim(), A.field());
}

// Commutative associative algebras satisfy every listed identity.
Fixture commutative_associative(std::string name, Algebra A, std::string provenance,
                                std::optional<Subspace> radical) {
  return Fixture{std::move(name), std::move(A), std::move(provenance), all_identities(), std::move(radical)};
}

Fixture a_ex(const FieldSpec& f, const std::string& suffix) {
  Algebra A = make_A_ex(f);
  return Fixture{"A_ex" + suffix,
                 A,
                 "two-dimensional semisimple bicommutative algebra: x^2 = x, xy = x",
                 {{IK::Bicommutative, true}, {IK::Associative, false}, {IK::Commutative, false}},
                 A.zero_subspace()};
}

Fixture a_nov(const FieldSpec& f, const std::string& suffix) {
  Algebra A = make_A_nov(f);
  return Fixture{"A_nov" + suffix,
                 A,
                 "two-dimensional Novikov algebra: bb = b, ab = a; b(ab) = 0 but a(bb) = a",
                 {{IK::NovikovLeft, true}, {IK::Bicommutative, false}},
                 span_of(A, {0})};
}

std::string field_suffix(const FieldSpec& f) { return f.is_finite() ? "_F" + std::to_string(f.p()) : "_Q"; }

}  // namespace

Algebra make_A_ex(const FieldSpec& f) { return from_entries(f, 2, {{0, 0, 0, 1}, {0, 1, 0, 1}}, {"x", "y"}); }

Algebra make_zero_algebra(const FieldSpec& f, std::size_t n) { return Algebra(f, n); }

Algebra make_truncated_polynomial(const FieldSpec& f, std::size_t k) {
  std::vector<Vector> table(k * k, zero_vector(f, k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(i == 0 ? "t" : "t" + std::to_string(i + 1));
    for (std::size_t j = 0; j < k; ++j)
      if (i + j + 1 < k) table[i * k + j][i + j + 1] = Scalar::one(f);
  }
  return Algebra(f, k, std::move(table), std::move(labels));
}

Algebra make_N1(const FieldSpec& f) { return from_entries(f, 2, {{0, 0, 1, 1}}, {"e1", "e2"}); }

Algebra make_A_nov(const FieldSpec& f) { return from_entries(f, 2, {{1, 1, 1, 1}, {0, 1, 0, 1}}, {"a", "b"}); }

Algebra make_FxF(const FieldSpec& f) { return from_entries(f, 2, {{0, 0, 0, 1}, {1, 1, 1, 1}}, {"e1", "e2"}); }

void verify_fixture(const Fixture& f, const EnumerationBudget& budget) {
  for (const auto& [kind, expected] : f.certified)
    if (check_identity(f.algebra, kind) != expected)
      fail(ErrorKind::Violation, "fixture " + f.name + ": certified " + to_string(kind) + " = " +
                                     (expected ? "true" : "false") + " does not hold");
  if (f.radical) {
    if (!is_ideal(f.algebra, *f.radical) || !is_solvable(restrict_to(f.algebra, *f.radical).algebra))
      fail(ErrorKind::Violation, "fixture " + f.name + ": certified radical is not a solvable ideal");
    if (f.algebra.field().is_finite() && radical(f.algebra, RadicalKind::Solvable, budget, false) != *f.radical)
      fail(ErrorKind::Violation, "fixture " + f.name + ": certified radical differs from the computed one");
  }
}

std::vector<Fixture> builtin_fixtures() {
  const FieldSpec F2 = FieldSpec::prime(2), F3 = FieldSpec::prime(3), F5 = FieldSpec::prime(5),
                  Q = FieldSpec::rationals();
  std::vector<Fixture> out;
  for (const auto& f : {F2, F3, F5, Q}) out.push_back(a_ex(f, field_suffix(f)));
  for (std::size_t n = 1; n <= 4; ++n) {
    Algebra Z = make_zero_algebra(F2, n);
    out.push_back(commutative_associative("Z" + std::to_string(n), Z, "zero algebra", Z.whole()));
  }
  {
    Algebra Z = make_zero_algebra(Q, 2);
    out.push_back(commutative_associative("Z2_Q", Z, "zero algebra", Z.whole()));
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    Algebra T = make_truncated_polynomial(F2, k);
    out.push_back(commutative_associative("T" + std::to_string(k), T,
                                          "truncated polynomial algebra tF[t]/(t^" + std::to_string(k + 1) + ")",
                                          T.whole()));
  }
  for (const auto& f : {F3, Q}) {
    Algebra T = make_truncated_polynomial(f, 3);
    out.push_back(commutative_associative("T3" + field_suffix(f), T, "truncated polynomial algebra tF[t]/(t^4)",
                                          T.whole()));
  }
  for (const auto& f : {F2, Q}) {
    Algebra N = make_N1(f);
    out.push_back(commutative_associative("N1" + std::string(f.is_finite() ? "" : "_Q"), N,
                                          "null-filiform: e1e1 = e2", N.whole()));
  }
  for (const auto& f : {F2, F3, Q}) out.push_back(a_nov(f, f == F2 ? "" : field_suffix(f)));
  {
    Algebra P = make_FxF(F2);
    out.push_back(commutative_associative("FxF", P, "direct sum of two copies of the field", P.zero_subspace()));
  }

  // Direct sums and quotients.
  {
    Algebra A = direct_sum(make_A_ex(F2), make_zero_algebra(F2, 1));
    out.push_back(Fixture{"A_ex+Z1", A, "direct sum of A_ex and a 1-dimensional zero algebra",
                          {{IK::Bicommutative, true}, {IK::Associative, false}}, span_of(A, {2})});
  }
  {
    Algebra A = direct_sum(make_A_ex(F2), make_A_ex(F2));
    out.push_back(Fixture{"A_ex+A_ex", A, "direct sum of two copies of A_ex",
                          {{IK::Bicommutative, true}, {IK::Associative, false}}, A.zero_subspace()});
  }
  {
    Algebra A = direct_sum(make_A_ex(F2), make_truncated_polynomial(F2, 2));
    out.push_back(Fixture{"A_ex+T2", A, "direct sum of A_ex and T2",
                          {{IK::Bicommutative, true}, {IK::Associative, false}}, span_of(A, {2, 3})});
  }
  {
    Algebra A = direct_sum(make_A_ex(F3), make_N1(F3));
    out.push_back(Fixture{"A_ex+N1_F3", A, "direct sum of A_ex and N1 over F_3",
                          {{IK::Bicommutative, true}, {IK::Associative, false}}, span_of(A, {2, 3})});
  }
  {
    Algebra A = direct_sum(make_A_nov(F2), make_zero_algebra(F2, 1));
    out.push_back(Fixture{"A_nov+Z1", A, "direct sum of A_nov and a 1-dimensional zero algebra",
                          {{IK::NovikovLeft, true}, {IK::Bicommutative, false}}, span_of(A, {0, 2})});
  }
  {
    Algebra A = direct_sum(make_truncated_polynomial(F2, 2), make_N1(F2));
    out.push_back(commutative_associative("T2+N1", A, "direct sum of T2 and N1", A.whole()));
  }
  {
    Algebra A = direct_sum(make_FxF(F2), make_truncated_polynomial(F2, 3));
    out.push_back(commutative_associative("FxF+T3", A, "direct sum of FxF and T3", span_of(A, {2, 3, 4})));
  }
  {
    Algebra T4 = make_truncated_polynomial(F2, 4);
    Algebra A = quotient(T4, span_of(T4, {3})).algebra;
    out.push_back(commutative_associative("T4/t4", A, "quotient of T4 by its ideal span{t^4}", A.whole()));
  }
  {
    Algebra S = direct_sum(make_A_ex(F2), make_zero_algebra(F2, 1));
    Algebra A = quotient(S, span_of(S, {2})).algebra.with_labels({"x", "y"});
    out.push_back(Fixture{"(A_ex+Z1)/Z1", A, "quotient of A_ex+Z1 by the zero summand",
                          {{IK::Bicommutative, true}, {IK::Associative, false}}, A.zero_subspace()});
  }
  for (const auto& f : out) verify_fixture(f);
  return out;
}

std::optional<Fixture> find_fixture(const std::string& name) {
  for (auto& f : builtin_fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

std::uint64_t exhaustive_table_count(const FieldSpec& f, std::size_t n, std::optional<std::size_t> max_nonzero,
                                     std::uint64_t cap) {
  require_finite_field(f, "table search");
  const std::size_t N = n * n * n;
  const std::size_t m = std::min(N, max_nonzero.value_or(N));
  const unsigned __int128 limit = static_cast<unsigned __int128>(cap) + 1;
  unsigned __int128 total = 0, binom = 1, power = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) {
      binom = binom * (N - k + 1) / k;
      power *= f.p() - 1;
    }
    if (binom >= limit || power >= limit) return cap + 1;
    total += binom * power;
    if (total >= limit) return cap + 1;
  }
  return static_cast<std::uint64_t>(total);
}

void for_each_search_result(const FieldSpec& f, std::size_t n, std::optional<IdentityKind> kind,
                            const SearchOptions& options, const std::function<void(const Algebra&)>& visit) {
  require_finite_field(f, "table search");
  const std::size_t N = n * n * n;
  const std::uint32_t q = f.p();
  auto emit = [&](const std::vector<std::uint32_t>& constants) {
    std::vector<Vector> table(n * n, zero_vector(f, n));
    for (std::size_t pos = 0; pos < N; ++pos)
      if (constants[pos]) table[pos / n][pos % n] = Scalar::residue(f, constants[pos]);
    Algebra A(f, n, std::move(table));
    if (!kind || check_identity(A, *kind)) visit(A);
  };

  if (options.mode == SearchOptions::Mode::Random) {
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution zero(options.sparsity);
    std::uniform_int_distribution<std::uint32_t> value(1, q - 1);
    std::vector<std::uint32_t> constants(N);
    for (std::size_t s = 0; s < options.samples; ++s) {
      for (auto& c : constants) c = zero(rng) ? 0 : value(rng);
      emit(constants);
    }
    return;
  }

  std::uint64_t count = exhaustive_table_count(f, n, options.max_nonzero, options.max_tables);
  if (count > options.max_tables)
    fail(ErrorKind::Unsupported, "exhaustive search over " + f.name() + " in dimension " + std::to_string(n) +
                                     " exceeds the budget of " + std::to_string(options.max_tables) +
                                     " tables; add a sparsity bound on nonzero structure constants");
  const std::size_t m = std::min(N, options.max_nonzero.value_or(N));
  std::vector<std::uint32_t> constants(N, 0);
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    while (true) {
      std::vector<std::uint32_t> vals(k, 1);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) constants[pos[i]] = vals[i];
        emit(constants);
        std::size_t d = k;
        while (d > 0 && vals[d - 1] == q - 1) vals[--d] = 1;
        if (d == 0) break;
        ++vals[d - 1];
      }
      for (std::size_t i = 0; i < k; ++i) constants[pos[i]] = 0;
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pos[i - 1] == N - k + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
}

std::vector<Algebra> search(const FieldSpec& f, std::size_t n, std::optional<IdentityKind> kind,
                            const SearchOptions& options) {
  std::vector<Algebra> out;
  for_each_search_result(f, n, kind, options, [&](const Algebra& A) { out.push_back(A); });
  return out;
}

}  // namespace nassoc
