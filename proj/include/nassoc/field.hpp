#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "nassoc/error.hpp"

namespace nassoc {

// Coefficient domain: the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Prime; }
  std::uint32_t p() const { return p_; }
  // 0 for Q, p for F_p.
  std::uint32_t characteristic() const { return p_; }
  // Number of elements; 0 stands for "infinite".
  std::uint64_t order() const { return p_; }

  std::string name() const;  // "Q" or "F_p"

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

std::uint32_t field_characteristic(const FieldSpec& f);

bool is_prime(std::uint64_t n);

// An exact field element. Rationals are kept reduced with positive
// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : p_(0), value_(mpq_class(0)) {}  // rational zero
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar residue(const FieldSpec& f, std::uint64_t r);
  // Accepts "n", "-n", "n/d" for Q and decimal integers (any sign, reduced
  // mod p) or "n/d" for F_p.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  FieldSpec field() const {
    return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_);
  }
  bool same_field(const Scalar& o) const { return p_ == o.p_; }
  bool is_zero() const;
  bool is_one() const;

  // Only meaningful for prime-field scalars.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const mpq_class& rational_value() const { return std::get<mpq_class>(value_); }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // this += a * b, without temporaries on the prime path.
  void add_product(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);
  // Total order used for canonical sorting: residues numerically, rationals
  // by value. Scalars from different fields are ordered by characteristic.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  std::uint32_t p_;
  std::variant<std::uint32_t, mpq_class> value_;

  void require_same(const Scalar& o) const;
};

enum class ArithOp { Add, Sub, Mul, Div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace nassoc
