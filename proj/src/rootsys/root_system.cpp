#include "trisym/rootsys/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "trisym/numeric/errors.hpp"

namespace trisym {

namespace {

using Matrix = std::vector<std::vector<int>>;

// Nodes are 0-based here.
void simple_bond(Matrix& a, int i, int j) {
  a[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
  a[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
}

// Multiple bond with `longer` the long root: <long, short^vee> = -mult.
void multiple_bond(Matrix& a, int longer, int shorter, int mult) {
  a[static_cast<size_t>(longer)][static_cast<size_t>(shorter)] = -mult;
  a[static_cast<size_t>(shorter)][static_cast<size_t>(longer)] = -1;
}

Matrix cartan_matrix(Family family, int l) {
  Matrix a(static_cast<size_t>(l), std::vector<int>(static_cast<size_t>(l), 0));
  for (int i = 0; i < l; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  auto chain = [&](int n) {
    for (int i = 0; i + 1 < n; ++i) simple_bond(a, i, i + 1);
  };
  switch (family) {
    case Family::A:
      chain(l);
      break;
    case Family::B:
      chain(l - 1);
      multiple_bond(a, l - 2, l - 1, 2);
      break;
    case Family::C:
      chain(l - 1);
      multiple_bond(a, l - 1, l - 2, 2);
      break;
    case Family::D:
      chain(l - 1);
      simple_bond(a, l - 3, l - 1);
      break;
    case Family::E:
      // chain 1..l-1 with the last node attached to node 3 (E6), 4 (E7), 5 (E8)
      chain(l - 1);
      simple_bond(a, l - 4, l - 1);
      break;
    case Family::F:
      simple_bond(a, 0, 1);
      multiple_bond(a, 1, 2, 2);
      simple_bond(a, 2, 3);
      break;
    case Family::G:
      multiple_bond(a, 1, 0, 3);
      break;
    case Family::T:
      throw InvalidArgument("no Cartan matrix for a torus");
  }
  return a;
}

}  // namespace

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

long expected_positive_root_count(Family family, int rank) {
  require_valid_simple(family, rank);
  const long l = rank;
  switch (family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
    case Family::T: break;
  }
  throw IntegrityError("unreachable family");
}

RootSystem build_root_system(Family family, int rank) {
  require_valid_simple(family, rank);
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = cartan_matrix(family, rank);
  rs.dual_coxeter = dual_coxeter_number(family, rank);

  const size_t l = static_cast<size_t>(rank);
  std::set<Root> known;
  std::vector<Root> layer;
  for (size_t i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    known.insert(r);
    layer.push_back(r);
  }
  // Grow by height: beta + alpha_i is a root iff q > 0 for the alpha_i-string
  // through beta, where p - q = sum_j b_j <alpha_j, alpha_i^vee>.
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const Root& beta : layer) {
      for (size_t i = 0; i < l; ++i) {
        int p = 0;
        Root down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (size_t j = 0; j < l; ++j) pairing += beta[j] * rs.cartan[j][i];
        const int q = p - pairing;
        if (q <= 0) continue;
        Root up = beta;
        ++up[i];
        if (known.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }

  rs.positive_roots.assign(known.begin(), known.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rs.maximal_root = rs.positive_roots.back();

  if (static_cast<long>(rs.positive_roots.size()) != expected_positive_root_count(family, rank)) {
    throw IntegrityError("root closure for " + rs.type().str() + " produced " +
                         std::to_string(rs.positive_roots.size()) + " positive roots");
  }
  for (const Root& r : rs.positive_roots)
    for (size_t i = 0; i < l; ++i)
      if (r[i] > rs.maximal_root[i]) throw IntegrityError("maximal root of " + rs.type().str() + " is not dominant");
  return rs;
}

long dimension(const RootSystem& rs) { return rs.rank + 2 * static_cast<long>(rs.positive_roots.size()); }

int bourbaki_node(Family family, int rank, int node) {
  require_valid_simple(family, rank);
  if (node < 1 || node > rank) throw InvalidArgument("node " + std::to_string(node) + " out of range");
  if (family != Family::E) return node;
  static const int e6[] = {1, 3, 4, 5, 6, 2};
  static const int e7[] = {7, 6, 5, 4, 3, 1, 2};
  static const int e8[] = {8, 7, 6, 5, 4, 3, 1, 2};
  const int* table = rank == 6 ? e6 : (rank == 7 ? e7 : e8);
  return table[node - 1];
}

}  // namespace trisym
