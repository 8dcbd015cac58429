#ifndef TRISYM_VERIFY_VERIFY_HPP
#define TRISYM_VERIFY_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trisym/einstein/einstein.hpp"

namespace trisym::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string scope;
  std::vector<CheckResult> checks;

  bool passed() const;
  size_t failures() const;
  void add(std::string name, bool ok, std::string detail = {});
  void append(const Report& other);
};

/// Dimension rows for the exceptional cases and A-II, dimension sums over
/// the catalog, root-system invariants.
Report verify_tables(int max_rank = 12);

/// Coefficients, solution counts, closed forms, decimals and eliminants of
/// the worked cases; every returned solution must pass verify_solution at tol.
Report verify_solutions(const Rational& tol);

/// Randomized and catalog-wide properties; deterministic for a given seed.
Report verify_properties(std::uint64_t seed, const Rational& tol, int max_rank = 12);

Report verify_all(std::uint64_t seed, const Rational& tol);

// -- oracles, exposed for the test suite --

/// Number of zeros of the cleared system r1 = r2 = r3 inside the open simplex
/// x1 + x2 + x3 = 1, counted as the total |winding number| of (r1 - r2, r1 - r3)
/// over an n-by-n triangulation. Floating point, independent of the solver.
int grid_oracle_count(const Triple& a, int n);

/// Distinct real roots in (lo, hi) from companion-matrix eigenvalues.
int numeric_root_count(const Polynomial& p, double lo, double hi);

/// a_i = num/den with den in [7, 97], strictly inside (0, 1/2).
Triple random_triple(std::mt19937_64& rng);

/// x1-normalized images of sols under the coordinate permutation perm
/// (new x_t = old x_{perm[t]}), compared to target by enclosure overlap.
bool permutation_matches(const std::vector<EinsteinSolution>& sols, const std::array<int, 3>& perm,
                         const std::vector<EinsteinSolution>& target);

/// The closed-form quartic printed for A-II in terms of k.
Polynomial a2_quartic(long k);
/// The printed Sturm series U0..U4 for that quartic.
std::vector<Polynomial> a2_sturm_series(long k);

}  // namespace trisym::verify

#endif  // TRISYM_VERIFY_VERIFY_HPP
