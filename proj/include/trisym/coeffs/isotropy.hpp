#ifndef TRISYM_COEFFS_ISOTROPY_HPP
#define TRISYM_COEFFS_ISOTROPY_HPP

#include <array>
#include <string>
#include <vector>

#include "trisym/cases/space_case.hpp"
#include "trisym/numeric/rational.hpp"
#include "trisym/rootsys/lie_type.hpp"

namespace trisym {

/// d_i, gamma_i, c_i = gamma_i / 2, A and a_i = A / d_i = (1 - gamma_i) / 2.
struct IsotropyData {
  std::array<long, 3> dims{};
  std::array<Rational, 3> gammas;
  std::array<Rational, 3> casimirs;
  Rational A;
  std::array<Rational, 3> a;

  /// Some a_i equals 1/2 (gamma_i = 0); only A-I and the flagged SO(n+2)/SO(n) rows.
  bool boundary() const;
  friend bool operator==(const IsotropyData&, const IsotropyData&) = default;
};

/// gamma = h^vee(sub) / (index * h^vee(ambient)). Throws Unsupported for a
/// torus factor.
Rational gamma_from_killing_ratio(const LieType& sub, const LieType& ambient, int embedding_index);

/// A = d_anchor (1 - gamma) / 2, then gamma_j = 1 - 2A / d_j. Throws
/// InconsistencyError when a derived gamma leaves (0, 1); with
/// allow_boundary, gamma = 0 (a = 1/2) is accepted.
IsotropyData derive_gammas(const std::array<long, 3>& dims, int anchor_index, const Rational& anchor_gamma,
                           bool allow_boundary = false);

struct GammaAnchor {
  int index = 1;  ///< 1-based block
  Rational gamma;
  std::string source;  ///< "tabulated", "killing-ratio" or "trivial-action"
};

/// The anchor used for a case: a tabulated value where the classification
/// text fixes one, otherwise the Killing ratio of the first block whose
/// effective factor is simple.
GammaAnchor anchor_for_case(const SpaceCase& c);

/// Killing-ratio anchors for every block with a simple effective factor.
std::vector<GammaAnchor> killing_ratio_anchors(const SpaceCase& c);

IsotropyData coefficients_for_case(const SpaceCase& c);

}  // namespace trisym

#endif  // TRISYM_COEFFS_ISOTROPY_HPP
