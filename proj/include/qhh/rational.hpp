#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qhh {

/// Arbitrary-precision rational number in canonical form
/// (reduced fraction, positive denominator).  Thin wrapper over GMP's
/// mpq_class; exists so the rest of the code has a stable, minimal
/// arithmetic surface and GMP never leaks into other headers' APIs.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n);
  /// num/den, canonicalized.  Throws DomainError when den == 0.
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  /// -1, 0 or +1.
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const;
  /// Inverse of str(); also accepts surrounding whitespace.
  /// Throws ParseError on malformed input, DomainError on zero denominator.
  static Rational from_string(std::string_view s);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

}  // namespace qhh
