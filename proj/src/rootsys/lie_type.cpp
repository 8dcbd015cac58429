#include "trisym/rootsys/lie_type.hpp"

#include <algorithm>
#include <sstream>

#include "trisym/numeric/errors.hpp"

namespace trisym {

char family_letter(Family f) {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G', 'T'};
  return letters[static_cast<int>(f)];
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    case 'T': return Family::T;
    default: break;
  }
  throw InvalidArgument(std::string("unknown Lie family '") + c + "'");
}

std::string LieType::str() const {
  if (is_torus()) return "T";
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void require_valid_simple(Family family, int rank) {
  auto fail = [&](const std::string& rule) {
    throw InvalidArgument(std::string("invalid simple type ") + family_letter(family) + std::to_string(rank) + ": " +
                          rule);
  };
  switch (family) {
    case Family::A: if (rank < 1) fail("A requires rank >= 1"); break;
    case Family::B: if (rank < 2) fail("B requires rank >= 2"); break;
    case Family::C: if (rank < 3) fail("C requires rank >= 3"); break;
    case Family::D: if (rank < 4) fail("D requires rank >= 4"); break;
    case Family::E: if (rank < 6 || rank > 8) fail("E requires rank 6, 7 or 8"); break;
    case Family::F: if (rank != 4) fail("F requires rank 4"); break;
    case Family::G: if (rank != 2) fail("G requires rank 2"); break;
    case Family::T: fail("a torus is not a simple type"); break;
  }
}

bool is_valid_simple(Family family, int rank) {
  try {
    require_valid_simple(family, rank);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

std::vector<LieType> canonicalize(Family family, int rank) {
  if (family == Family::T) return {LieType{Family::T, 1}};
  if (rank < 0) throw InvalidArgument("negative rank");
  if (rank == 0) return {};
  switch (family) {
    case Family::B:
    case Family::C:
      if (rank == 1) return {LieType{Family::A, 1}};
      if (rank == 2) return {LieType{Family::B, 2}};
      break;
    case Family::D:
      if (rank == 1) return {LieType{Family::T, 1}};
      if (rank == 2) return {LieType{Family::A, 1}, LieType{Family::A, 1}};
      if (rank == 3) return {LieType{Family::A, 3}};
      break;
    default:
      break;
  }
  require_valid_simple(family, rank);
  return {LieType{family, rank}};
}

SubalgebraType::SubalgebraType(std::initializer_list<LieType> factors) {
  for (const auto& f : factors) add(f.family, f.rank);
}

SubalgebraType& SubalgebraType::add(Family family, int rank, int copies) {
  for (int c = 0; c < copies; ++c)
    for (const auto& t : canonicalize(family, rank)) factors_.push_back(t);
  std::sort(factors_.begin(), factors_.end(), [](const LieType& a, const LieType& b) {
    if (a.is_torus() != b.is_torus()) return a.is_torus();
    return a < b;
  });
  return *this;
}

int SubalgebraType::torus_rank() const {
  return static_cast<int>(std::count_if(factors_.begin(), factors_.end(), [](const LieType& t) { return t.is_torus(); }));
}

std::vector<LieType> SubalgebraType::simple_factors() const {
  std::vector<LieType> out;
  for (const auto& t : factors_)
    if (!t.is_torus()) out.push_back(t);
  return out;
}

bool SubalgebraType::is_simple() const { return factors_.size() == 1 && !factors_.front().is_torus(); }

std::string SubalgebraType::str() const {
  if (factors_.empty()) return "e";
  std::ostringstream os;
  const int t = torus_rank();
  bool first = true;
  if (t > 0) {
    os << "T" << (t > 1 ? "^" + std::to_string(t) : "");
    first = false;
  }
  for (const auto& f : factors_) {
    if (f.is_torus()) continue;
    os << (first ? "" : " x ") << f.str();
    first = false;
  }
  return os.str();
}

long dimension(Family family, int rank) {
  long total = 0;
  for (const auto& t : canonicalize(family, rank)) {
    const long l = t.rank;
    switch (t.family) {
      case Family::A: total += l * (l + 2); break;
      case Family::B:
      case Family::C: total += l * (2 * l + 1); break;
      case Family::D: total += l * (2 * l - 1); break;
      case Family::E: total += l == 6 ? 78 : (l == 7 ? 133 : 248); break;
      case Family::F: total += 52; break;
      case Family::G: total += 14; break;
      case Family::T: total += 1; break;
    }
  }
  return total;
}

long dimension(const LieType& t) { return dimension(t.family, t.rank); }

long dimension(const SubalgebraType& t) {
  long total = 0;
  for (const auto& f : t.factors()) total += dimension(f);
  return total;
}

int dual_coxeter_number(Family family, int rank) {
  const auto parts = canonicalize(family, rank);
  if (parts.size() != 1 || parts.front().is_torus()) {
    throw InvalidArgument(std::string("dual Coxeter number needs a simple type, got ") + family_letter(family) +
                          std::to_string(rank));
  }
  const int l = parts.front().rank;
  switch (parts.front().family) {
    case Family::A: return l + 1;
    case Family::B: return 2 * l - 1;
    case Family::C: return l + 1;
    case Family::D: return 2 * l - 2;
    case Family::E: return l == 6 ? 12 : (l == 7 ? 18 : 30);
    case Family::F: return 9;
    case Family::G: return 4;
    case Family::T: break;
  }
  throw IntegrityError("unreachable family in dual_coxeter_number");
}

}  // namespace trisym
