#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nassoc/algebra.hpp"

namespace nassoc {

struct EnumerationBudget;

enum class SeriesKind { Derived, RightPower, LeftPower, BracketPower };

std::string to_string(SeriesKind k);
std::optional<SeriesKind> parse_series_kind(std::string_view s);

// A weakly descending chain starting at A. Positions are 1-based: position k
// holds A^k for the power series and A^(k-1) for the derived series.
struct SeriesResult {
  SeriesKind kind;
  std::vector<Subspace> terms;
  bool terminated = false;                  // last term is 0
  std::optional<std::size_t> stabilized_at; // position of the first term equal to its successor
  std::optional<std::size_t> index;         // position of the first zero term

  // Term at a 1-based position, extended past the computed range by 0
  // (terminated) or the stable term.
  Subspace term(std::size_t position) const;
};

// The bracket series is computed at least up to position max(dim + 1,
// min_positions) because a repeated term does not force it to be constant.
SeriesResult compute_series(const Algebra& A, SeriesKind kind, std::size_t min_positions = 0);

struct NilpotencyProfile {
  bool solvable = false;
  bool right_nilpotent = false;
  bool left_nilpotent = false;
  bool weakly_nilpotent = false;
  bool nilpotent = false;
  std::optional<std::size_t> solvable_index, right_index, left_index, nilpotent_index;
};

NilpotencyProfile nilpotency_profile(const Algebra& A);
// Profile of a subalgebra of A, viewed as an algebra in its own right.
NilpotencyProfile nilpotency_profile(const Algebra& A, const Subspace& subalgebra);

bool is_solvable(const Algebra& A);
bool is_nilpotent(const Algebra& A);
bool is_right_nilpotent(const Algebra& A);
bool is_left_nilpotent(const Algebra& A);

// Ascending chain from..to of ideals whose consecutive factors are minimal
// ideals of the corresponding quotients. Ties are broken by the canonical
// subspace order.
struct ChiefSeries {
  std::vector<Subspace> ideals;
};

ChiefSeries chief_series(const Algebra& A, const Subspace& from, const Subspace& to,
                         const EnumerationBudget& budget);

}  // namespace nassoc
