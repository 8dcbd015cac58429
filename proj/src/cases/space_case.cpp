#include "trisym/cases/space_case.hpp"

#include <algorithm>
#include <sstream>

#include "trisym/numeric/errors.hpp"

namespace trisym {

namespace {

using Params = std::map<std::string, int>;

struct TagInfo {
  int inp;
  const char* label;
  std::vector<std::string> params;
};

const std::vector<TagInfo>& tag_table() {
  static const std::vector<TagInfo> table = {
      {1, "A-I", {}},          {2, "A-II", {"l"}},      {3, "A-III", {"l", "i", "j"}}, {4, "B-I", {"l", "i", "j"}},
      {5, "B-II", {"l", "i"}}, {6, "B-III", {"l", "i", "j"}}, {7, "C-I", {"l", "i", "j"}}, {8, "D-I", {"l", "i", "j"}},
      {9, "D-II", {"l", "i"}}, {10, "D-III", {"l", "i", "j"}}, {11, "D-IV", {"l"}},      {12, "D-V", {"l"}},
      {13, "E6-I", {}},        {14, "E6-II", {}},       {15, "E6-III", {}},            {16, "E7-I", {}},
      {17, "E7-II", {}},       {18, "E7-III", {}},      {19, "E8-I", {}},              {20, "E8-II", {}},
      {21, "F4-I", {}},        {22, "F4-II", {}},
  };
  return table;
}

const TagInfo& info(int inp) {
  if (inp < 1 || inp > 22) throw InvalidArgument("unknown tag InP" + std::to_string(inp));
  return tag_table()[static_cast<size_t>(inp - 1)];
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

// ---- classical three-block models -------------------------------------

enum class Classical { SU, SO, Sp };

struct TripleModel {
  Classical kind;
  std::array<int, 3> n;
  // blocks[t] = (a, b): p_{t+1} sits between the a-th and b-th diagonal blocks
  std::array<std::pair<int, int>, 3> blocks;
};

constexpr std::array<std::pair<int, int>, 3> kFirstLayout{{{2, 3}, {1, 2}, {1, 3}}};
constexpr std::array<std::pair<int, int>, 3> kSecondLayout{{{1, 2}, {2, 3}, {1, 3}}};

void add_block_algebra(SubalgebraType& t, Classical kind, int m) {
  switch (kind) {
    case Classical::SU:
      t.add(Family::A, m - 1);
      break;
    case Classical::Sp:
      t.add(Family::C, m);
      break;
    case Classical::SO:
      if (m % 2 == 0) {
        t.add(Family::D, m / 2);
      } else {
        t.add(Family::B, (m - 1) / 2);
      }
      break;
  }
}

std::optional<EffectiveFactor> block_effective(Classical kind, int m) {
  switch (kind) {
    case Classical::SU:
      return EffectiveFactor{{Family::A, m - 1}, 1};
    case Classical::Sp: {
      const auto t = canonicalize(Family::C, m);
      return EffectiveFactor{t.front(), 1};
    }
    case Classical::SO: {
      if (m == 3) return EffectiveFactor{{Family::A, 1}, 2};
      if (m < 5) return std::nullopt;
      const auto t = m % 2 == 0 ? canonicalize(Family::D, m / 2) : canonicalize(Family::B, (m - 1) / 2);
      return EffectiveFactor{t.front(), 1};
    }
  }
  return std::nullopt;
}

void apply_triple(SpaceCase& c, const TripleModel& m) {
  c.isotropy = SubalgebraType{};
  if (m.kind == Classical::SU) c.isotropy.add_torus(2);
  for (int v : m.n) add_block_algebra(c.isotropy, m.kind, v);
  for (size_t t = 0; t < 3; ++t) {
    const auto [a, b] = m.blocks[t];
    const int other = 6 - a - b;
    const int na = m.n[static_cast<size_t>(a - 1)];
    const int nb = m.n[static_cast<size_t>(b - 1)];
    const int nc = m.n[static_cast<size_t>(other - 1)];
    SubalgebraType k;
    if (m.kind == Classical::SU) k.add_torus();
    add_block_algebra(k, m.kind, na + nb);
    add_block_algebra(k, m.kind, nc);
    c.fixed[t] = k;
    c.effective[t] = block_effective(m.kind, na + nb);
  }
  // SO(n+2)/SO(n): two of the three blocks are one-dimensional
  if (m.kind == Classical::SO && std::count(m.n.begin(), m.n.end(), 1) == 2) c.flagged = true;
}

EffectiveFactor eff(Family f, int r, int index = 1) { return EffectiveFactor{canonicalize(f, r).front(), index}; }

SubalgebraType sub(std::initializer_list<std::pair<Family, int>> parts) {
  SubalgebraType t;
  for (const auto& [f, r] : parts) t.add(f, r);
  return t;
}

void set_inner(SpaceCase& c, std::set<int> h, std::set<int> h1) {
  c.marking.h_marks = std::move(h);
  c.marking.h1_marks = std::move(h1);
  c.marking.outer.reset();
}

void set_outer(SpaceCase& c, std::set<int> h, std::string what) {
  c.marking.h_marks = std::move(h);
  c.marking.h1_marks.clear();
  c.marking.outer = std::move(what);
}

int need(const Params& p, const std::string& key, int inp) {
  auto it = p.find(key);
  if (it == p.end()) throw InvalidArgument(label_for(inp) + " requires parameter " + key);
  return it->second;
}

void check(bool ok, int inp, const std::string& rule) {
  if (!ok) throw InvalidArgument(label_for(inp) + " parameters out of range: " + rule);
}

}  // namespace

std::string label_for(int inp) { return info(inp).label; }

std::vector<std::string> required_params(int inp) { return info(inp).params; }

std::string SpaceCase::display_name() const {
  if (params.empty()) return label;
  std::ostringstream os;
  os << label << "(";
  bool first = true;
  for (const auto& key : required_params(inp)) {
    os << (first ? "" : ",") << key << "=" << params.at(key);
    first = false;
  }
  os << ")";
  return os.str();
}

SpaceCase make_case(int inp, const Params& params) {
  const TagInfo& ti = info(inp);
  for (const auto& [key, value] : params) {
    if (std::find(ti.params.begin(), ti.params.end(), key) == ti.params.end()) {
      throw InvalidArgument(std::string(ti.label) + " does not take parameter " + key);
    }
  }
  SpaceCase c;
  c.inp = inp;
  c.label = ti.label;
  for (const auto& key : ti.params) c.params[key] = need(params, key, inp);

  const int l = ti.params.empty() ? 0 : c.params.at("l");
  const int i = c.params.count("i") ? c.params.at("i") : 0;
  const int j = c.params.count("j") ? c.params.at("j") : 0;

  switch (inp) {
    case 1: {
      c.ambient = {Family::A, 1};
      c.isotropy = SubalgebraType{};
      for (auto& k : c.fixed) k = sub({{Family::T, 1}});
      set_outer(c, {1}, "tau^k = -Id on the center of k");
      break;
    }
    case 2: {
      check(l >= 3 && l % 2 == 1, inp, "l >= 3 odd");
      const int k = (l + 1) / 2;
      c.ambient = {Family::A, l};
      c.isotropy = sub({{Family::T, 1}, {Family::A, k - 1}});
      c.fixed[0] = sub({{Family::T, 1}, {Family::A, k - 1}, {Family::A, k - 1}});
      c.fixed[1] = sub({{Family::C, k}});
      c.fixed[2] = sub({{Family::D, k}});
      c.effective[1] = eff(Family::C, k);
      if (k >= 3) c.effective[2] = eff(Family::D, k, 2);
      set_outer(c, {k}, "tau^k(alpha_m) = alpha_{l+1-m} for m != (l+1)/2, identity on the center of k");
      break;
    }
    case 3: {
      check(l >= 2, inp, "l >= 2");
      check(1 <= i && i <= (l + 1) / 3, inp, "1 <= i <= [(l+1)/3]");
      check(2 * i <= j && j <= (l + i + 1) / 2, inp, "2i <= j <= [(l+i+1)/2]");
      c.ambient = {Family::A, l};
      apply_triple(c, {Classical::SU, {i, j - i, l + 1 - j}, kFirstLayout});
      set_inner(c, {i}, {j});
      break;
    }
    case 4: {
      check(l >= 3 && 3 <= i && i <= l, inp, "2 < i <= l");
      check(ceil_div(i, 2) <= j && j <= i - 1, inp, "i/2 <= j <= i-1");
      c.ambient = {Family::B, l};
      apply_triple(c, {Classical::SO, {2 * j, 2 * i - 2 * j, 2 * l - 2 * i + 1}, kSecondLayout});
      set_inner(c, {i}, {j});
      break;
    }
    case 5: {
      check(l >= 2, inp, "l >= 2");
      check(std::max(2, ceil_div(l + 1, 2)) <= i && i <= l, inp, "(l+1)/2 <= i <= l");
      c.ambient = {Family::B, l};
      apply_triple(c, {Classical::SO, {2 * i - 1, 1, 2 * l - 2 * i + 1}, kSecondLayout});
      set_outer(c, {i}, "tau^k swaps alpha_1 and -phi");
      break;
    }
    case 6: {
      check(l >= 2, inp, "l >= 2");
      check((2 * l + 3) / 3 <= i && i <= l, inp, "[(2l+3)/3] <= i <= l");
      // j = i would repeat B-II with i = l
      check((i + 2) / 2 <= j && j <= std::min(2 * i - l, i - 1), inp, "[(i+2)/2] <= j <= min(2i-l, i-1)");
      c.ambient = {Family::B, l};
      apply_triple(c, {Classical::SO, {2 * j - 1, 2 * i - 2 * j + 1, 2 * l - 2 * i + 1}, kSecondLayout});
      set_outer(c, {i}, "tau^k = (alpha_1 <-> -phi) composed with e^{ad H1}, H1 marked at alpha_j");
      break;
    }
    case 7: {
      check(l >= 3, inp, "l >= 3");
      check(1 <= i && i <= l / 3, inp, "1 <= i <= [l/3]");
      check(2 * i <= j && j <= (l + i) / 2, inp, "2i <= j <= [(l+i)/2]");
      c.ambient = {Family::C, l};
      apply_triple(c, {Classical::Sp, {i, j - i, l - j}, kFirstLayout});
      set_inner(c, {i}, {j});
      break;
    }
    case 8: {
      check(l >= 4, inp, "l >= 4");
      check(1 <= i && i <= l / 3, inp, "1 <= i <= [l/3]");
      check(2 * i <= j && j <= (l + i) / 2, inp, "2i <= j <= [(l+i)/2]");
      c.ambient = {Family::D, l};
      apply_triple(c, {Classical::SO, {2 * i, 2 * j - 2 * i, 2 * l - 2 * j}, kFirstLayout});
      set_inner(c, {i}, {j});
      break;
    }
    case 9: {
      check(l >= 4, inp, "l >= 4");
      check(1 <= i && i <= l - 2, inp, "1 <= i <= l-2");
      c.ambient = {Family::D, l};
      apply_triple(c, {Classical::SO, {2 * i, 2 * l - 2 * i - 1, 1}, kFirstLayout});
      set_outer(c, {i}, "tau^k swaps alpha_{l-1} and alpha_l");
      break;
    }
    case 10: {
      check(l >= 4, inp, "l >= 4");
      check(1 <= i && i <= l - 2, inp, "1 <= i <= l-2");
      check(i < j && j <= (l + i - 1) / 2, inp, "i < j <= [(l+i-1)/2]");
      c.ambient = {Family::D, l};
      apply_triple(c, {Classical::SO, {2 * i, 2 * j - 2 * i + 1, 2 * l - 2 * j - 1}, kFirstLayout});
      set_outer(c, {i}, "tau^k = (alpha_{l-1} <-> alpha_l) composed with e^{ad H1}, H1 marked at alpha_j");
      break;
    }
    case 11: {
      check(l >= 4, inp, "l >= 4");
      c.ambient = {Family::D, l};
      apply_triple(c, {Classical::SO, {2 * l - 2, 1, 1}, kFirstLayout});
      set_outer(c, {1}, "tau^k = -Id on the center of k");
      break;
    }
    case 12: {
      check(l >= 4, inp, "l >= 4");
      c.ambient = {Family::D, l};
      c.isotropy = SubalgebraType{}.add_torus(2).add(Family::A, l - 2);
      c.fixed[0] = sub({{Family::T, 1}, {Family::D, l - 1}});
      c.fixed[1] = sub({{Family::T, 1}, {Family::A, l - 1}});
      c.fixed[2] = c.fixed[1];
      c.effective[0] = eff(Family::D, l - 1);
      c.effective[1] = eff(Family::A, l - 1);
      c.effective[2] = eff(Family::A, l - 1);
      set_inner(c, {1}, {l});
      break;
    }
    case 13:
      c.ambient = {Family::E, 6};
      c.isotropy = SubalgebraType{}.add_torus(2).add(Family::D, 4);
      for (size_t t = 0; t < 3; ++t) {
        c.fixed[t] = sub({{Family::T, 1}, {Family::D, 5}});
        c.effective[t] = eff(Family::D, 5);
      }
      set_inner(c, {1}, {5});
      break;
    case 14:
      c.ambient = {Family::E, 6};
      c.isotropy = sub({{Family::T, 1}, {Family::A, 1}, {Family::A, 1}, {Family::A, 3}});
      c.fixed[0] = sub({{Family::A, 1}, {Family::A, 5}});
      c.fixed[1] = c.fixed[0];
      c.fixed[2] = sub({{Family::T, 1}, {Family::D, 5}});
      c.effective = {eff(Family::A, 5), eff(Family::A, 5), eff(Family::D, 5)};
      set_inner(c, {6}, {2});
      break;
    case 15:
      c.ambient = {Family::E, 6};
      c.isotropy = sub({{Family::A, 1}, {Family::C, 3}});
      c.fixed[0] = sub({{Family::A, 1}, {Family::A, 5}});
      c.fixed[1] = sub({{Family::F, 4}});
      c.fixed[2] = sub({{Family::C, 4}});
      c.effective = {eff(Family::A, 5), eff(Family::F, 4), eff(Family::C, 4)};
      set_outer(c, {6}, "tau^k(alpha_m) = alpha_{6-m}, m = 1..5");
      break;
    case 16:
      c.ambient = {Family::E, 7};
      c.isotropy = sub({{Family::A, 1}, {Family::A, 1}, {Family::A, 1}, {Family::D, 4}});
      for (size_t t = 0; t < 3; ++t) {
        c.fixed[t] = sub({{Family::A, 1}, {Family::D, 6}});
        c.effective[t] = eff(Family::D, 6);
      }
      set_inner(c, {6}, {2});
      break;
    case 17:
      c.ambient = {Family::E, 7};
      c.isotropy = sub({{Family::T, 1}, {Family::A, 1}, {Family::A, 5}});
      c.fixed[0] = sub({{Family::A, 7}});
      c.fixed[1] = sub({{Family::A, 1}, {Family::D, 6}});
      c.fixed[2] = sub({{Family::T, 1}, {Family::E, 6}});
      c.effective = {eff(Family::A, 7), eff(Family::D, 6), eff(Family::E, 6)};
      set_inner(c, {7}, {2});
      break;
    case 18:
      c.ambient = {Family::E, 7};
      c.isotropy = sub({{Family::D, 4}});
      for (size_t t = 0; t < 3; ++t) {
        c.fixed[t] = sub({{Family::A, 7}});
        c.effective[t] = eff(Family::A, 7);
      }
      set_outer(c, {7}, "tau^k = (alpha_m <-> alpha_{8-m}, m = 2..6; alpha_1 <-> -phi) composed with e^{ad H1}, H1 marked at alpha_4");
      break;
    case 19:
      c.ambient = {Family::E, 8};
      c.isotropy = sub({{Family::A, 1}, {Family::A, 1}, {Family::D, 6}});
      c.fixed[0] = sub({{Family::D, 8}});
      c.fixed[1] = sub({{Family::A, 1}, {Family::E, 7}});
      c.fixed[2] = c.fixed[1];
      c.effective = {eff(Family::D, 8), eff(Family::E, 7), eff(Family::E, 7)};
      set_inner(c, {7}, {1});
      break;
    case 20:
      c.ambient = {Family::E, 8};
      c.isotropy = sub({{Family::D, 4}, {Family::D, 4}});
      for (size_t t = 0; t < 3; ++t) {
        c.fixed[t] = sub({{Family::D, 8}});
        c.effective[t] = eff(Family::D, 8);
      }
      set_inner(c, {7}, {3});
      break;
    case 21:
      c.ambient = {Family::F, 4};
      c.isotropy = sub({{Family::D, 4}});
      for (size_t t = 0; t < 3; ++t) {
        c.fixed[t] = sub({{Family::B, 4}});
        c.effective[t] = eff(Family::B, 4);
      }
      set_inner(c, {4}, {3});
      break;
    case 22:
      c.ambient = {Family::F, 4};
      c.isotropy = sub({{Family::A, 1}, {Family::A, 1}, {Family::C, 2}});
      c.fixed[0] = sub({{Family::B, 4}});
      c.fixed[1] = sub({{Family::A, 1}, {Family::C, 3}});
      c.fixed[2] = c.fixed[1];
      c.effective = {eff(Family::B, 4), eff(Family::C, 3), eff(Family::C, 3)};
      set_inner(c, {4}, {1});
      break;
    default:
      throw IntegrityError("unhandled tag " + std::to_string(inp));
  }
  return c;
}

std::vector<SpaceCase> enumerate_cases(int max_rank) {
  if (max_rank < 1) throw InvalidArgument("max_rank must be >= 1");
  std::vector<SpaceCase> out;
  auto push = [&](int inp, Params p) { out.push_back(make_case(inp, p)); };

  push(1, {});
  for (int l = 3; l <= max_rank; l += 2) push(2, {{"l", l}});
  for (int l = 2; l <= max_rank; ++l)
    for (int i = 1; i <= (l + 1) / 3; ++i)
      for (int j = 2 * i; j <= (l + i + 1) / 2; ++j) push(3, {{"l", l}, {"i", i}, {"j", j}});
  for (int l = 3; l <= max_rank; ++l)
    for (int i = 3; i <= l; ++i)
      for (int j = ceil_div(i, 2); j <= i - 1; ++j) push(4, {{"l", l}, {"i", i}, {"j", j}});
  for (int l = 2; l <= max_rank; ++l)
    for (int i = std::max(2, ceil_div(l + 1, 2)); i <= l; ++i) push(5, {{"l", l}, {"i", i}});
  for (int l = 2; l <= max_rank; ++l)
    for (int i = (2 * l + 3) / 3; i <= l; ++i)
      for (int j = (i + 2) / 2; j <= std::min(2 * i - l, i - 1); ++j) push(6, {{"l", l}, {"i", i}, {"j", j}});
  for (int l = 3; l <= max_rank; ++l)
    for (int i = 1; i <= l / 3; ++i)
      for (int j = 2 * i; j <= (l + i) / 2; ++j) push(7, {{"l", l}, {"i", i}, {"j", j}});
  for (int l = 4; l <= max_rank; ++l)
    for (int i = 1; i <= l / 3; ++i)
      for (int j = 2 * i; j <= (l + i) / 2; ++j) push(8, {{"l", l}, {"i", i}, {"j", j}});
  for (int l = 4; l <= max_rank; ++l)
    for (int i = 1; i <= l - 2; ++i) push(9, {{"l", l}, {"i", i}});
  for (int l = 4; l <= max_rank; ++l)
    for (int i = 1; i <= l - 2; ++i)
      for (int j = i + 1; j <= (l + i - 1) / 2; ++j) push(10, {{"l", l}, {"i", i}, {"j", j}});
  for (int l = 4; l <= max_rank; ++l) push(11, {{"l", l}});
  for (int l = 4; l <= max_rank; ++l) push(12, {{"l", l}});
  if (max_rank >= 6) {
    for (int inp = 13; inp <= 15; ++inp) push(inp, {});
  }
  if (max_rank >= 7) {
    for (int inp = 16; inp <= 18; ++inp) push(inp, {});
  }
  if (max_rank >= 8) {
    for (int inp = 19; inp <= 20; ++inp) push(inp, {});
  }
  if (max_rank >= 4) {
    for (int inp = 21; inp <= 22; ++inp) push(inp, {});
  }
  std::stable_sort(out.begin(), out.end(), [](const SpaceCase& a, const SpaceCase& b) { return a.inp < b.inp; });
  return out;
}

CaseDims inner_decomposition_dims(const RootSystem& rs, const InvolutionMarking& marking) {
  if (marking.outer) throw InvalidArgument("inner_decomposition_dims needs a marking without an outer part");
  if (marking.h_marks.empty() || marking.h1_marks.empty()) throw InvalidArgument("H and H1 marks must be nonempty");
  for (const auto* marks : {&marking.h_marks, &marking.h1_marks})
    for (int node : *marks)
      if (node < 1 || node > rs.rank) {
        throw InvalidArgument("marked node " + std::to_string(node) + " outside 1.." + std::to_string(rs.rank));
      }
  CaseDims out;
  out.dim_h = rs.rank;
  for (const Root& r : rs.positive_roots) {
    int eh = 0, eh1 = 0;
    for (int node : marking.h_marks) eh += r[static_cast<size_t>(node - 1)];
    for (int node : marking.h1_marks) eh1 += r[static_cast<size_t>(node - 1)];
    eh %= 2;
    eh1 %= 2;
    if (eh == 0 && eh1 == 0) {
      out.dim_h += 2;
    } else {
      // (0,1) -> p1, (1,0) -> p2, (1,1) -> p3
      const int slot = eh == 0 ? 0 : (eh1 == 0 ? 1 : 2);
      out.d[static_cast<size_t>(slot)] += 2;
    }
  }
  return out;
}

CaseDims case_dims(const SpaceCase& c) {
  const long dim_g = dimension(c.ambient);
  CaseDims meta;
  meta.dim_h = dimension(c.isotropy);
  for (size_t t = 0; t < 3; ++t) meta.d[t] = dimension(c.fixed[t]) - meta.dim_h;

  CaseDims out = meta;
  if (c.inner()) {
    out = inner_decomposition_dims(build_root_system(c.ambient.family, c.ambient.rank), c.marking);
    if (!(out == meta)) {
      std::ostringstream os;
      os << c.display_name() << ": root parity gives (" << out.dim_h << "; " << out.d[0] << ", " << out.d[1] << ", "
         << out.d[2] << ") but metadata gives (" << meta.dim_h << "; " << meta.d[0] << ", " << meta.d[1] << ", "
         << meta.d[2] << ")";
      throw IntegrityError(os.str());
    }
  }
  const long total = out.dim_h + out.d[0] + out.d[1] + out.d[2];
  if (total != dim_g) {
    throw IntegrityError(c.display_name() + ": dim h + d1 + d2 + d3 = " + std::to_string(total) + " but dim " +
                         c.ambient.str() + " = " + std::to_string(dim_g));
  }
  for (long d : out.d)
    if (d <= 0) throw IntegrityError(c.display_name() + ": nonpositive isotropy dimension");
  return out;
}

int parse_selector(const std::string& selector) {
  std::string s = selector;
  if (s.rfind("InP", 0) == 0) {
    const std::string num = s.substr(3);
    if (!num.empty() && std::all_of(num.begin(), num.end(), ::isdigit)) {
      const int v = std::stoi(num);
      if (v >= 1 && v <= 22) return v;
    }
    throw InvalidArgument("unknown tag '" + selector + "'");
  }
  std::string norm;
  for (char ch : s)
    if (ch != '_' && ch != ' ') norm += static_cast<char>(::toupper(static_cast<unsigned char>(ch)));
  for (const auto& ti : tag_table()) {
    if (norm == ti.label) return ti.inp;
  }
  throw InvalidArgument("unknown case selector '" + selector + "'");
}

SpaceCase select_case(const std::string& selector, const Params& params) {
  const int inp = parse_selector(selector);
  Params p = params;
  if (inp == 2 && p.count("k")) {
    const int k = p.at("k");
    if (p.count("l") && p.at("l") != 2 * k - 1) throw InvalidArgument("A-II: --l and --k disagree (l = 2k - 1)");
    p.erase("k");
    p["l"] = 2 * k - 1;
  }
  for (const auto& key : required_params(inp)) {
    if (!p.count(key)) {
      std::string all;
      for (const auto& r : required_params(inp)) all += " --" + r;
      throw InvalidArgument(label_for(inp) + " is a family; give" + all);
    }
  }
  return make_case(inp, p);
}

}  // namespace trisym
