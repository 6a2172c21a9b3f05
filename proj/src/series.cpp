#include "nassoc/series.hpp"

#include <algorithm>

#include "nassoc/enumerate.hpp"

namespace nassoc {

std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Derived: return "derived";
    case SeriesKind::RightPower: return "rightPower";
    case SeriesKind::LeftPower: return "leftPower";
    case SeriesKind::BracketPower: return "bracketPower";
  }
  return "?";
}

std::optional<SeriesKind> parse_series_kind(std::string_view s) {
  if (s == "derived") return SeriesKind::Derived;
  if (s == "rightPower" || s == "right-power" || s == "right") return SeriesKind::RightPower;
  if (s == "leftPower" || s == "left-power" || s == "left") return SeriesKind::LeftPower;
  if (s == "bracketPower" || s == "bracket-power" || s == "bracket" || s == "lower-central")
    return SeriesKind::BracketPower;
  return std::nullopt;
}

Subspace SeriesResult::term(std::size_t position) const {
  if (position == 0) fail(ErrorKind::Usage, "series positions start at 1");
  if (position <= terms.size()) return terms[position - 1];
  if (terminated) return Subspace::zero(terms.back().field(), terms.back().ambient());
  if (kind == SeriesKind::BracketPower)
    fail(ErrorKind::Usage, "bracket power beyond the computed range; recompute with a larger bound");
  return terms.back();
}

SeriesResult compute_series(const Algebra& A, SeriesKind kind, std::size_t min_positions) {
  SeriesResult out{kind, {A.whole()}, false, std::nullopt, std::nullopt};
  auto& terms = out.terms;
  if (terms.back().is_zero()) {
    out.terminated = true;
    out.index = 1;
    return out;
  }
  const std::size_t bracket_bound = std::max(A.dim() + 1, min_positions);
  for (;;) {
    const Subspace& last = terms.back();
    Subspace next = A.zero_subspace();
    switch (kind) {
      case SeriesKind::Derived: next = square(A, last); break;
      case SeriesKind::RightPower: next = subspace_product(A, last, terms.front()); break;
      case SeriesKind::LeftPower: next = subspace_product(A, terms.front(), last); break;
      case SeriesKind::BracketPower: {
        // A^[n] = sum over i + j = n of A^[i] A^[j], positions 1-based.
        const std::size_t n = terms.size() + 1;
        EchelonBuilder b(A.field(), A.dim());
        for (std::size_t i = 1; i < n; ++i) {
          Subspace part = subspace_product(A, terms[i - 1], terms[n - i - 1]);
          for (std::size_t r = 0; r < part.dim(); ++r) b.insert(part.basis().row(r));
        }
        next = b.finish();
        break;
      }
    }
    if (next == last) {
      if (!out.stabilized_at) out.stabilized_at = terms.size();
      if (kind != SeriesKind::BracketPower || terms.size() + 1 > bracket_bound) return out;
    }
    terms.push_back(std::move(next));
    if (terms.back().is_zero()) {
      out.terminated = true;
      out.index = terms.size();
      return out;
    }
    if (kind == SeriesKind::BracketPower && terms.size() >= bracket_bound) return out;
  }
}

NilpotencyProfile nilpotency_profile(const Algebra& A) {
  NilpotencyProfile p;
  auto d = compute_series(A, SeriesKind::Derived);
  auto r = compute_series(A, SeriesKind::RightPower);
  auto l = compute_series(A, SeriesKind::LeftPower);
  auto b = compute_series(A, SeriesKind::BracketPower);
  p.solvable = d.terminated;
  p.solvable_index = d.index;
  p.right_nilpotent = r.terminated;
  p.right_index = r.index;
  p.left_nilpotent = l.terminated;
  p.left_index = l.index;
  p.weakly_nilpotent = p.right_nilpotent && p.left_nilpotent;
  p.nilpotent = b.terminated;
  p.nilpotent_index = b.index;
  return p;
}

NilpotencyProfile nilpotency_profile(const Algebra& A, const Subspace& subalgebra) {
  return nilpotency_profile(restrict_to(A, subalgebra).algebra);
}

bool is_solvable(const Algebra& A) { return compute_series(A, SeriesKind::Derived).terminated; }
bool is_nilpotent(const Algebra& A) { return compute_series(A, SeriesKind::BracketPower).terminated; }
bool is_right_nilpotent(const Algebra& A) { return compute_series(A, SeriesKind::RightPower).terminated; }
bool is_left_nilpotent(const Algebra& A) { return compute_series(A, SeriesKind::LeftPower).terminated; }

ChiefSeries chief_series(const Algebra& A, const Subspace& from, const Subspace& to,
                         const EnumerationBudget& budget) {
  require_finite_field(A.field(), "chief series");
  if (!is_ideal(A, from) || !is_ideal(A, to))
    fail(ErrorKind::Usage, "chief series endpoints must be ideals");
  if (!to.contains(from)) fail(ErrorKind::Usage, "chief series start is not contained in its end");
  ChiefSeries out{{from}};
  while (out.ideals.back() != to) {
    Quotient q = quotient(A, out.ideals.back());
    Subspace target = q.project(to);
    std::optional<Subspace> best;
    for (const auto& m : minimal_ideals(q.algebra, budget)) {
      if (!target.contains(m)) continue;
      Subspace lifted = q.preimage(m);
      if (!best || lifted < *best) best = std::move(lifted);
    }
    if (!best) fail(ErrorKind::Violation, "no minimal ideal found below the chief series target");
    out.ideals.push_back(std::move(*best));
  }
  return out;
}

}  // namespace nassoc
