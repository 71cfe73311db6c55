#include "qhh/rational.hpp"

#include <cctype>
#include <ostream>

#include "qhh/errors.hpp"

namespace qhh {

namespace {

mpz_class mpz_from_ll(long long n) {
  // mpz_class has no long long constructor on LP64 it does via long; stay portable.
  mpz_class z;
  bool neg = n < 0;
  unsigned long long u = neg ? 0ULL - static_cast<unsigned long long>(n)
                             : static_cast<unsigned long long>(n);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  if (neg) z = -z;
  return z;
}

}  // namespace

Rational::Rational(long long n) : v_(mpz_from_ll(n)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  v_ = mpq_class(mpz_from_ll(num));
  v_ /= mpq_class(mpz_from_ll(den));
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::from_string(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string t(s.substr(b, e - b));
  if (t.empty()) throw ParseError("rational: empty string");

  auto check_int = [](const std::string& p) {
    size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
    if (i == p.size()) return false;
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    return true;
  };

  std::string num = t, den = "1";
  if (auto slash = t.find('/'); slash != std::string::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  if (!check_int(num) || !check_int(den))
    throw ParseError("rational: malformed value '" + t + "'");
  mpz_class dz(den);
  if (dz == 0) throw DomainError("rational: zero denominator in '" + t + "'");
  mpq_class q{mpz_class(num)};
  q /= mpq_class(dz);
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace qhh
