#ifndef TRISYM_POLYSOLVE_POLYNOMIAL_HPP
#define TRISYM_POLYSOLVE_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "trisym/numeric/rational.hpp"

namespace trisym {

/// Dense univariate polynomial with rational coefficients, stored in
/// ascending order. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial from_descending(const std::vector<Rational>& descending);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// The polynomial x.
  static Polynomial x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  /// Sign of p(x) as x -> +inf (or -inf).
  int sign_at_infinity(bool positive) const;

  Polynomial derivative() const;
  /// Same roots, monic.
  Polynomial monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;
  /// p(x + s)
  Polynomial shifted(const Rational& s) const;
  /// p(-x)
  Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; throws on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  /// Human form, highest degree first, e.g. "1200*x^4 - 4960*x^3 + 855".
  std::string str(const std::string& var = "x") const;
  /// Descending coefficient strings, the wire form for JSON.
  std::vector<std::string> wire() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'), made primitive.
Polynomial squarefree_part(const Polynomial& p);
/// Yun's decomposition: p = c * prod f_i^i with f_i squarefree and coprime.
/// Returns (f_i, i) for nonconstant f_i only.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);
/// True when p and c*q agree for some nonzero rational c.
bool proportional(const Polynomial& p, const Polynomial& q);

}  // namespace trisym

#endif  // TRISYM_POLYSOLVE_POLYNOMIAL_HPP
