#ifndef TRISYM_POLYSOLVE_SURD_HPP
#define TRISYM_POLYSOLVE_SURD_HPP

#include <compare>
#include <string>

#include "trisym/numeric/rational.hpp"
#include "trisym/polysolve/interval.hpp"

namespace trisym {

/// p + q*sqrt(D) with D a squarefree integer >= 1. D == 1 only when q == 0,
/// so a rational value has exactly one representation.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational p) : p_(std::move(p)) {}  // NOLINT: rationals embed
  /// Normalizes sqrt(D) by extracting square factors.
  QuadraticSurd(Rational p, Rational q, BigInt d);

  /// Real roots of a x^2 + b x + c (a != 0), ascending; empty if none.
  static std::vector<QuadraticSurd> quadratic_roots(const Rational& a, const Rational& b, const Rational& c);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const BigInt& d() const { return d_; }
  bool is_rational() const { return q_.is_zero(); }
  int sign() const;

  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  QuadraticSurd& operator/=(const QuadraticSurd& o);
  friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
  friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
  friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }
  QuadraticSurd operator-() const;
  QuadraticSurd conjugate() const;

  /// Exact comparison, also across different fields.
  friend std::strong_ordering compare(const QuadraticSurd& a, const QuadraticSurd& b);
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }
  friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) { return compare(a, b); }

  /// Rational enclosure of width at most `width`.
  RationalInterval enclosure(const Rational& width) const;
  std::string to_decimal(int digits) const;
  std::string str() const;

 private:
  // Arithmetic needs both operands in one field (or one of them rational).
  void unify(const QuadraticSurd& o) const;
  Rational p_;
  Rational q_;
  BigInt d_{1};
};

/// Largest k with k*k <= n.
BigInt isqrt(const BigInt& n);

/// Round-to-`digits` of the unique value inside shrinking enclosures;
/// `enclose(w)` must return an enclosure of width <= w.
template <class Enclose>
std::string decimal_from_enclosures(Enclose&& enclose, int digits) {
  Rational w = Rational(1, 10).pow(static_cast<unsigned>(digits + 2));
  for (int round = 0; round < 64; ++round) {
    const RationalInterval iv = enclose(w);
    const std::string a = iv.lo.to_decimal(digits);
    if (a == iv.hi.to_decimal(digits)) return a;
    w /= Rational(1024);
  }
  // Only reachable for a value sitting exactly on a rounding tie.
  return enclose(w).midpoint().to_decimal(digits);
}

}  // namespace trisym

#endif  // TRISYM_POLYSOLVE_SURD_HPP
