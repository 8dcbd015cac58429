#ifndef TRISYM_POLYSOLVE_RESULTANT_HPP
#define TRISYM_POLYSOLVE_RESULTANT_HPP

#include <map>
#include <string>
#include <utility>

#include "trisym/numeric/rational.hpp"
#include "trisym/polysolve/polynomial.hpp"

namespace trisym {

enum class Var { X, Y };

/// Sparse bivariate polynomial in X and Y, keyed by (deg_X, deg_Y).
class BiPolynomial {
 public:
  BiPolynomial() = default;

  static BiPolynomial constant(const Rational& c);
  static BiPolynomial var(Var v);
  /// Lift a univariate polynomial into the given variable.
  static BiPolynomial lift(const Polynomial& p, Var v);

  bool is_zero() const { return terms_.empty(); }
  int degree(Var v) const;
  Rational coeff(int ex, int ey) const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  /// Coefficient of v^k as a polynomial in the other variable.
  Polynomial coeff_in(Var v, int k) const;
  /// Substitute v = value, leaving a polynomial in the other variable.
  Polynomial substitute(Var v, const Rational& value) const;
  Rational eval(const Rational& x, const Rational& y) const;

  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);
  BiPolynomial& operator*=(const BiPolynomial& o);
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(BiPolynomial a, const BiPolynomial& b) { return a *= b; }
  friend BiPolynomial operator*(const Rational& s, const BiPolynomial& b);
  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) = default;

  std::string str() const;

 private:
  void add_term(int ex, int ey, const Rational& c);
  std::map<std::pair<int, int>, Rational> terms_;
};

/// Sylvester resultant of p and q with respect to `eliminate`, as a
/// polynomial in the remaining variable. Computed by evaluating at enough
/// integer points and interpolating, with the formal degrees of p and q
/// fixed so that evaluation commutes with the determinant.
Polynomial resultant(const BiPolynomial& p, const BiPolynomial& q, Var eliminate);

/// Sylvester resultant of two univariate polynomials.
Rational resultant(const Polynomial& p, const Polynomial& q);

/// Determinant by fraction-producing Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace trisym

#endif  // TRISYM_POLYSOLVE_RESULTANT_HPP
