#ifndef TRISYM_CASES_SPACE_CASE_HPP
#define TRISYM_CASES_SPACE_CASE_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trisym/rootsys/lie_type.hpp"
#include "trisym/rootsys/root_system.hpp"

namespace trisym {

/// Inner involution data: H is marked on the nodes where <H, alpha> = pi*i,
/// likewise H1. Nodes are 1-based in the root system's numbering.
struct InvolutionMarking {
  std::set<int> h_marks;
  std::set<int> h1_marks;
  /// Set when theta or tau is outer; then h_marks/h1_marks are unused.
  std::optional<std::string> outer;
};

/// The simple effective part of k_i = h + p_i together with its embedding
/// index in g, when it exists.
struct EffectiveFactor {
  LieType type;
  int embedding_index = 1;
};

struct CaseDims {
  long dim_h = 0;
  std::array<long, 3> d{};
  friend bool operator==(const CaseDims&, const CaseDims&) = default;
};

struct SpaceCase {
  int inp = 0;                ///< 1..22
  std::string label;          ///< e.g. "E7-II"
  LieType ambient;
  std::map<std::string, int> params;  ///< subset of l, i, j, k
  SubalgebraType isotropy;    ///< h
  std::array<SubalgebraType, 3> fixed;  ///< k_i = h + p_i
  std::array<std::optional<EffectiveFactor>, 3> effective;
  InvolutionMarking marking;
  /// The two SO(n+2)/SO(n) rows whose summands are not pairwise
  /// nonisomorphic; diagonal metrics do not cover them.
  bool flagged = false;

  std::string tag() const { return "InP" + std::to_string(inp); }
  bool inner() const { return !marking.outer.has_value(); }
  /// Label plus parameters, e.g. "A-III(l=4,i=1,j=2)".
  std::string display_name() const;
  std::string isotropy_type() const { return isotropy.str(); }
};

/// Every case with ambient rank <= max_rank, ordered by tag then parameters.
std::vector<SpaceCase> enumerate_cases(int max_rank);

/// Build and range-check one case. Parameters not used by the tag must be absent.
SpaceCase make_case(int inp, const std::map<std::string, int>& params);

/// Parity split of the positive roots; see the library docs for the
/// eigenspace convention. Returns (dim h, d1, d2, d3).
CaseDims inner_decomposition_dims(const RootSystem& rs, const InvolutionMarking& marking);

/// Dimensions of h, p1, p2, p3, checked against dim g. Inner cases are
/// also checked against the fixed-subalgebra metadata.
CaseDims case_dims(const SpaceCase& c);

/// Resolve a label ("E7-II") or tag ("InP17") plus parameters. Parameter
/// `k` is accepted for A-II as l = 2k - 1.
SpaceCase select_case(const std::string& selector, const std::map<std::string, int>& params);

/// Tag number for a label or tag string; throws when unknown.
int parse_selector(const std::string& selector);

/// Parameter names a tag needs, in order.
std::vector<std::string> required_params(int inp);

std::string label_for(int inp);

}  // namespace trisym

#endif  // TRISYM_CASES_SPACE_CASE_HPP
