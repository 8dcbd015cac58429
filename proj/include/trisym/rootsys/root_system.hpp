#ifndef TRISYM_ROOTSYS_ROOT_SYSTEM_HPP
#define TRISYM_ROOTSYS_ROOT_SYSTEM_HPP

#include <vector>

#include "trisym/rootsys/lie_type.hpp"

namespace trisym {

using Root = std::vector<int>;

/// A simple root system with nodes numbered as in the classification
/// diagrams used by the case catalog. For A-D, F4 and G2 that numbering is
/// Bourbaki's; the E series differs (see bourbaki_node).
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<int>> cartan;
  /// Positive roots in the simple-root basis, sorted by height then lexicographically.
  std::vector<Root> positive_roots;
  Root maximal_root;
  int dual_coxeter = 0;

  LieType type() const { return {family, rank}; }
};

RootSystem build_root_system(Family family, int rank);

/// rank + 2 * |positive roots|
long dimension(const RootSystem& rs);

/// Closed-form |positive roots| for a valid simple type.
long expected_positive_root_count(Family family, int rank);

/// Bourbaki label (1-based) of a 1-based node in this library's numbering.
int bourbaki_node(Family family, int rank, int node);

int height(const Root& r);

}  // namespace trisym

#endif  // TRISYM_ROOTSYS_ROOT_SYSTEM_HPP
