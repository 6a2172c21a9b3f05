#include "nassoc/field.hpp"

#include <charconv>
#include <string>

namespace nassoc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    fail(ErrorKind::Usage, "field modulus " + std::to_string(p) +
                               " is not a prime below 2^31");
  return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::name() const {
  return kind_ == Kind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

std::uint32_t field_characteristic(const FieldSpec& f) {
  return f.characteristic();
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long v) {
  Scalar s;
  if (f.is_finite()) {
    std::int64_t p = f.p();
    std::int64_t r = static_cast<std::int64_t>(v) % p;
    if (r < 0) r += p;
    s.p_ = f.p();
    s.value_ = static_cast<std::uint32_t>(r);
  } else {
    s.value_ = mpq_class(v);
  }
  return s;
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
  if (!f.is_finite()) return from_int(f, static_cast<long>(r));
  Scalar s;
  s.p_ = f.p();
  s.value_ = static_cast<std::uint32_t>(r % f.p());
  return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::Domain, "zero denominator");
  Scalar s;
  mpq_class q(num, den);
  q.canonicalize();
  s.value_ = std::move(q);
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  auto bad = [&]() -> Scalar {
    fail(ErrorKind::Parse, "cannot parse coefficient \"" + std::string(text) +
                               "\" over " + f.name());
  };
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid_int(den) || den[0] == '-' || den[0] == '+') return bad();
  }
  if (!valid_int(num)) return bad();
  std::string num_s(num[0] == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) fail(ErrorKind::Domain, "zero denominator in \"" + std::string(text) + "\"");
  if (!f.is_finite()) return rational(n, d);
  mpz_class p(f.p());
  mpz_class rn = n % p;
  if (rn < 0) rn += p;
  mpz_class rd = d % p;
  if (rd == 0) fail(ErrorKind::Domain, "denominator divisible by p in \"" + std::string(text) + "\"");
  Scalar a = residue(f, rn.get_ui());
  Scalar b = residue(f, rd.get_ui());
  return a / b;
}

bool Scalar::is_zero() const {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same(const Scalar& o) const {
  if (p_ != o.p_)
    fail(ErrorKind::Usage, "arithmetic between scalars of " + field().name() +
                               " and " + o.field().name());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ != 0) {
    auto& r = std::get<std::uint32_t>(s.value_);
    r = r == 0 ? 0 : p_ - r;
  } else {
    auto& q = std::get<mpq_class>(s.value_);
    q = -q;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::Domain, "division by zero");
  Scalar s = *this;
  if (p_ != 0) {
    s.value_ = inverse_mod(std::get<std::uint32_t>(value_), p_);
  } else {
    auto& q = std::get<mpq_class>(s.value_);
    q = 1 / q;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (p_ != 0) {
    auto& r = std::get<std::uint32_t>(value_);
    std::uint64_t sum = std::uint64_t(r) + std::get<std::uint32_t>(o.value_);
    r = static_cast<std::uint32_t>(sum >= p_ ? sum - p_ : sum);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (p_ != 0) {
    auto& r = std::get<std::uint32_t>(value_);
    std::uint32_t b = std::get<std::uint32_t>(o.value_);
    r = r >= b ? r - b : static_cast<std::uint32_t>(std::uint64_t(r) + p_ - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (p_ != 0) {
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>(std::uint64_t(r) * std::get<std::uint32_t>(o.value_) % p_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same(a);
  require_same(b);
  if (p_ != 0) {
    auto& r = std::get<std::uint32_t>(value_);
    std::uint64_t prod = std::uint64_t(std::get<std::uint32_t>(a.value_)) *
                         std::get<std::uint32_t>(b.value_);
    r = static_cast<std::uint32_t>((prod + r) % p_);
  } else {
    std::get<mpq_class>(value_) +=
        std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_ != 0)
    return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return a.p_ <=> b.p_;
  if (a.p_ != 0)
    return std::get<std::uint32_t>(a.value_) <=> std::get<std::uint32_t>(b.value_);
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  fail(ErrorKind::Usage, "unknown arithmetic operation");
}

}  // namespace nassoc
