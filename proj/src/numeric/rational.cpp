#include "trisym/numeric/rational.hpp"

#include <cctype>
#include <ostream>

#include "trisym/numeric/errors.hpp"

namespace trisym {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational literal");

  auto parse_int = [&](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
      }
    }
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return BigInt(buf, 10);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos && text.find_first_of(".eE") != std::string_view::npos) {
    // decimal or scientific: 0.25, 1e-20, -2.5E3
    const auto epos = text.find_first_of("eE");
    std::string_view mant = text.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string_view::npos) exp10 = parse_int(text.substr(epos + 1)).get_si();
    std::string digits(mant);
    const auto dot = digits.find('.');
    if (dot != std::string::npos) {
      exp10 -= static_cast<long>(digits.size() - dot - 1);
      digits.erase(dot, 1);
      if (digits.empty() || digits == "-" || digits == "+") throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
    }
    if (exp10 > 4000 || exp10 < -4000) throw InvalidArgument("exponent out of range in '" + std::string(text) + "'");
    const Rational scale = Rational(10).pow(static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    const Rational m(parse_int(digits));
    return exp10 < 0 ? m / scale : m * scale;
  }
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("rational literal with zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::pow2(int e) {
  BigInt p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(BigInt(1), p);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(unsigned e) const {
  Rational out(1);
  Rational base = *this;
  while (e) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

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
  if (o.is_zero()) throw InvalidArgument("division by zero");
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

std::string Rational::wire() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(|x| * 10^d) with ties away from zero: floor((2|p|*10^d + q) / (2q))
  const BigInt p = abs().num();
  const BigInt q = den();
  BigInt scaled = (2 * p * scale + q) / (2 * q);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  const bool negative = sign() < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

long Rational::ilog2_abs() const {
  if (is_zero()) throw InvalidArgument("ilog2 of zero");
  const BigInt p = abs().num();
  const BigInt q = den();
  long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  // 2^e <= p/q < 2^(e+2) here; settle the exact floor.
  Rational x = abs();
  while (x < pow2(static_cast<int>(e))) --e;
  while (x >= pow2(static_cast<int>(e + 1))) ++e;
  return e;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trisym
