#ifndef TRISYM_EINSTEIN_EINSTEIN_HPP
#define TRISYM_EINSTEIN_EINSTEIN_HPP

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trisym/cases/space_case.hpp"
#include "trisym/coeffs/isotropy.hpp"
#include "trisym/polysolve/interval.hpp"
#include "trisym/polysolve/resultant.hpp"
#include "trisym/polysolve/sturm.hpp"
#include "trisym/polysolve/surd.hpp"

namespace trisym {

using Triple = std::array<Rational, 3>;

enum class Branch { Standard, EqualPairLinear, EqualPairSum, Generic };
enum class ConstantSign { Positive, Zero, Negative, Undetermined };

std::string branch_name(Branch b);
std::string sign_name(ConstantSign s);

using Coordinate = std::variant<Rational, QuadraticSurd, IsolatingInterval>;

/// One Einstein metric up to scale, normalized so x1 = 1.
struct EinsteinSolution {
  std::array<Coordinate, 3> x;
  Branch branch = Branch::Standard;
  ConstantSign einstein_constant_sign = ConstantSign::Undetermined;
  /// max |r_i - r_j| evaluated exactly at the midpoint; zero for exact solutions.
  Rational residual_bound;

  bool exact() const;
};

/// 2 x1 x2 x3 r_i = x_j x_k + a_i (x_i^2 - x_j^2 - x_k^2), for any ring-like T.
template <class T>
std::array<T, 3> cleared_ricci(const Triple& a, const std::array<T, 3>& x) {
  std::array<T, 3> out;
  for (size_t i = 0; i < 3; ++i) {
    const size_t j = (i + 1) % 3, k = (i + 2) % 3;
    out[i] = x[j] * x[k] + T(a[i]) * (x[i] * x[i] - x[j] * x[j] - x[k] * x[k]);
  }
  return out;
}

/// r_i = 1/(2x_i) + (a_i/2)(x_i/(x_j x_k) - x_k/(x_i x_j) - x_j/(x_i x_k)).
std::array<Rational, 3> ricci_coefficients(const Triple& a, const Triple& x);
std::array<RationalInterval, 3> ricci_coefficients(const Triple& a, const std::array<RationalInterval, 3>& x);

/// r1 - r2 and r1 - r3 cleared of denominators, with x1 = 1, as polynomials
/// in X = x2 and Y = x3.
std::pair<BiPolynomial, BiPolynomial> einstein_system(const Triple& a);

/// Resultant of the cleared system with respect to x2; a polynomial in x3.
Polynomial einstein_eliminant(const Triple& a);

/// Sign of det d(F, G)/d(x2, x3) at a solution, F and G the cleared system
/// with x1 = 1. Zero marks a degenerate (multiple) solution; for interval
/// coordinates, also one whose sign could not be certified.
int jacobian_sign(const Triple& a, const EinsteinSolution& s);

/// Every positive solution up to scale, sorted by branch then by the
/// coordinates. Requires each a_i in (0, 1/2].
std::vector<EinsteinSolution> solve_einstein(const Triple& a);

struct CaseSolutions {
  SpaceCase space;
  IsotropyData iso;
  bool applicable = true;
  std::string note;
  std::vector<EinsteinSolution> solutions;
};

/// coefficients_for_case then solve_einstein. The flagged SO(n+2)/SO(n)
/// rows come back with applicable = false and no solutions.
CaseSolutions solve_case(const SpaceCase& c);

/// Exact coordinates: r1 = r2 = r3 exactly. Interval coordinates: refine
/// until the midpoint residual is below tol (true), or until interval
/// arithmetic proves the box holds no solution (false).
bool verify_solution(const Triple& a, const EinsteinSolution& sol, const Rational& tol);

RationalInterval enclosure(const Coordinate& c, const Rational& width);
Coordinate refine(const Coordinate& c, const Rational& width);
/// Refines every interval coordinate to the given width and recomputes the residual.
EinsteinSolution refine(const EinsteinSolution& s, const Triple& a, const Rational& width);
std::string to_decimal(const Coordinate& c, int digits);
/// Midpoint used for ordering and residuals.
Rational midpoint(const Coordinate& c);
bool is_exact(const Coordinate& c);

}  // namespace trisym

#endif  // TRISYM_EINSTEIN_EINSTEIN_HPP
