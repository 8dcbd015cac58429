#ifndef TRISYM_NUMERIC_RATIONAL_HPP
#define TRISYM_NUMERIC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trisym {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit from integer literals
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& value) : v_(value) {}
  explicit Rational(mpq_class value);
  /// Accepts "p", "-p", "p/q", decimals "0.25" and scientific "1e-20",
  /// with optional surrounding whitespace.
  static Rational parse(std::string_view text);
  /// 2^e for any integer e.
  static Rational pow2(int e);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned e) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, otherwise "p/q".
  std::string str() const;
  /// Always "p/q"; the wire form used in JSON documents.
  std::string wire() const;
  /// Correctly rounded (half away from zero) fixed-point decimal.
  std::string to_decimal(int digits) const;
  /// Display only; never used on a certification path.
  double to_double() const { return v_.get_d(); }

  /// floor(log2 |x|) for nonzero x.
  long ilog2_abs() const;

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace trisym

#endif  // TRISYM_NUMERIC_RATIONAL_HPP
