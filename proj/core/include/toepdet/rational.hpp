#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace toepdet {

/// Arbitrary-precision rational scalar, always held in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1. A value with
/// denominator 1 is an exact integer, and integer-only pipelines keep it
/// that way. Every operation is exact; nothing here ever rounds.
///
/// Values are immutable once computed and safe to share across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, literals are exact
  Rational(long num, long den);

  /// Parses the canonical text form: optional sign, digits, optional
  /// "/digits" with a positive denominator. No whitespace. Throws
  /// std::invalid_argument on anything else (including a zero denominator).
  static Rational parse(std::string_view text);

  /// Canonical text form: `p` for integers, `p/q` otherwise (q > 0, reduced).
  std::string str() const;

  /// Nearest double. Exact values outside double range become +-inf.
  double to_double() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  /// Bit length of the numerator (0 for a zero value). Used by the
  /// elimination traces to report peak scalar growth.
  std::size_t numerator_bits() const;

  Rational operator-() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Backing GMP value; canonical by construction.
  const mpq_class& mpq() const { return v_; }

  /// Adopts a GMP rational, canonicalizing it first.
  explicit Rational(mpq_class q);
  explicit Rational(const mpz_class& num, const mpz_class& den);

 private:
  struct already_canonical_t {};
  Rational(mpq_class q, already_canonical_t) : v_(std::move(q)) {}

  mpq_class v_;
};

/// (-1)^n: +1 for even n, -1 for odd n. Defined for any integer n.
Rational sign_pow(long n);

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace toepdet
