#include "toepdet/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace toepdet {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (mpz_sgn(den.get_mpz_t()) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) +
                                "' (expected p or p/q, q > 0)");
  };

  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    ++pos;
  }
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == num_begin) {
    fail();
  }

  std::string num(text.substr(0, pos));
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') {
      fail();
    }
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == den_begin || pos != text.size()) {
      fail();
    }
    den.assign(text.substr(den_begin));
  }

  const mpz_class d(den);
  if (mpz_sgn(d.get_mpz_t()) == 0) {
    fail();
  }
  return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
  std::string out = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    out += '/';
    out += v_.get_den().get_str();
  }
  return out;
}

double Rational::to_double() const { return v_.get_d(); }

std::size_t Rational::numerator_bits() const {
  if (is_zero()) {
    return 0;
  }
  return mpz_sizeinbase(mpq_numref(v_.get_mpq_t()), 2);
}

Rational Rational::operator-() const {
  return Rational(mpq_class(-v_), already_canonical_t{});
}

Rational& Rational::operator+=(const Rational& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  v_ /= rhs.v_;
  return *this;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ + b.v_), Rational::already_canonical_t{});
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ - b.v_), Rational::already_canonical_t{});
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ * b.v_), Rational::already_canonical_t{});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  return Rational(mpq_class(a.v_ / b.v_), Rational::already_canonical_t{});
}

bool operator==(const Rational& a, const Rational& b) {
  return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational sign_pow(long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

}  // namespace toepdet
