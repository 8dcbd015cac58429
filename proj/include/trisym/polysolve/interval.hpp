#ifndef TRISYM_POLYSOLVE_INTERVAL_HPP
#define TRISYM_POLYSOLVE_INTERVAL_HPP

#include <algorithm>

#include "trisym/numeric/errors.hpp"
#include "trisym/numeric/rational.hpp"
#include "trisym/polysolve/polynomial.hpp"

namespace trisym {

/// Closed interval [lo, hi] with exact rational endpoints; used for
/// enclosures, so every operation returns a superset of the true range.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational v) : lo(v), hi(std::move(v)) {}  // NOLINT: point interval
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw InvalidArgument("interval with lo > hi");
  }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  /// +1 / -1 when the whole interval has that strict sign, else 0.
  int certain_sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }
  Rational magnitude() const { return std::max(lo.abs(), hi.abs()); }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  RationalInterval operator-() const { return {-hi, -lo}; }
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) throw InvalidArgument("interval division by an interval containing zero");
    return a * RationalInterval(b.hi.inverse(), b.lo.inverse());
  }
  RationalInterval& operator+=(const RationalInterval& o) { return *this = *this + o; }
  RationalInterval& operator-=(const RationalInterval& o) { return *this = *this - o; }
  RationalInterval& operator*=(const RationalInterval& o) { return *this = *this * o; }
};

/// Horner evaluation in interval arithmetic.
inline RationalInterval eval(const Polynomial& p, const RationalInterval& x) {
  RationalInterval acc(Rational(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + RationalInterval(*it);
  return acc;
}

}  // namespace trisym

#endif  // TRISYM_POLYSOLVE_INTERVAL_HPP
