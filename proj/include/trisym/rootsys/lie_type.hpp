#ifndef TRISYM_ROOTSYS_LIE_TYPE_HPP
#define TRISYM_ROOTSYS_LIE_TYPE_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace trisym {

/// Simple families A..G. T marks a one-dimensional torus factor and only
/// occurs inside subalgebra types, never as an ambient algebra.
enum class Family { A, B, C, D, E, F, G, T };

char family_letter(Family f);
Family family_from_letter(char c);

/// One factor of a (possibly nonsimple) compact Lie algebra: a simple type
/// (family, rank) or, for Family::T, a circle (rank is ignored and taken as 1).
struct LieType {
  Family family = Family::A;
  int rank = 1;

  friend auto operator<=>(const LieType&, const LieType&) = default;
  bool is_torus() const { return family == Family::T; }
  std::string str() const;
};

/// Strict validity of an ambient simple type: A>=1, B>=2, C>=3, D>=4,
/// E in {6,7,8}, F4, G2. Throws InvalidArgument naming the violated rule.
void require_valid_simple(Family family, int rank);
bool is_valid_simple(Family family, int rank);

/// Rewrite a possibly degenerate low-rank type into standard simple or
/// torus factors: X0 -> (nothing), D1 -> T, B1/C1 -> A1, D2 -> A1 x A1,
/// D3 -> A3, C2 -> B2. Already standard types pass through unchanged.
std::vector<LieType> canonicalize(Family family, int rank);

/// Product of factors; the empty product is the trivial algebra e.
class SubalgebraType {
 public:
  SubalgebraType() = default;
  SubalgebraType(std::initializer_list<LieType> factors);

  /// Adds a factor after canonicalization.
  SubalgebraType& add(Family family, int rank, int copies = 1);
  SubalgebraType& add_torus(int copies = 1) { return add(Family::T, 1, copies); }

  const std::vector<LieType>& factors() const { return factors_; }
  int torus_rank() const;
  std::vector<LieType> simple_factors() const;
  bool is_trivial() const { return factors_.empty(); }
  /// The single simple factor when there is exactly one and no torus.
  bool is_simple() const;

  friend bool operator==(const SubalgebraType&, const SubalgebraType&) = default;

  /// e.g. "T^2 x A1 x D4"; "e" when trivial.
  std::string str() const;

 private:
  std::vector<LieType> factors_;  // kept sorted: tori first, then by (family, rank)
};

/// Dimension of a simple type (after canonicalization), 1 for T.
long dimension(Family family, int rank);
long dimension(const LieType& t);
long dimension(const SubalgebraType& t);

/// Dual Coxeter number of a simple type; low-rank aliases are canonicalized
/// first, so (C, 1) -> 2.
int dual_coxeter_number(Family family, int rank);

}  // namespace trisym

#endif  // TRISYM_ROOTSYS_LIE_TYPE_HPP
