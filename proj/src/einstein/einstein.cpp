#include "trisym/einstein/einstein.hpp"

#include <algorithm>
#include <tuple>

#include "trisym/numeric/errors.hpp"

namespace trisym {

namespace {

const Rational kHalf(1, 2);
// interval coordinates are stored at this width
const Rational kResidualWidth = Rational::pow2(-80);

QuadraticSurd as_surd(const Coordinate& c) {
  if (const auto* r = std::get_if<Rational>(&c)) return *r;
  if (const auto* s = std::get_if<QuadraticSurd>(&c)) return *s;
  const auto& iv = std::get<IsolatingInterval>(c);
  if (iv.exact) return *iv.exact;
  throw InvalidArgument("coordinate is not exact");
}

Coordinate exact_coordinate(const QuadraticSurd& s) {
  if (s.is_rational()) return s.p();
  return s;
}

int branch_rank(Branch b) { return static_cast<int>(b); }

ConstantSign to_sign(int s) {
  return s > 0 ? ConstantSign::Positive : s < 0 ? ConstantSign::Negative : ConstantSign::Zero;
}

std::array<RationalInterval, 3> box(const std::array<Coordinate, 3>& x, const Rational& width) {
  return {enclosure(x[0], width), enclosure(x[1], width), enclosure(x[2], width)};
}

Triple midpoints(const std::array<Coordinate, 3>& x) { return {midpoint(x[0]), midpoint(x[1]), midpoint(x[2])}; }

Rational midpoint_residual(const Triple& a, const std::array<Coordinate, 3>& x) {
  const auto r = ricci_coefficients(a, midpoints(x));
  return std::max({(r[0] - r[1]).abs(), (r[0] - r[2]).abs(), (r[1] - r[2]).abs()});
}

bool exactly_einstein(const Triple& a, const std::array<QuadraticSurd, 3>& x) {
  const auto R = cleared_ricci(a, x);
  return R[0] == R[1] && R[0] == R[2];
}

// Sign of R1, residual at the midpoint.
void finish(const Triple& a, EinsteinSolution& s) {
  if (s.exact()) {
    const std::array<QuadraticSurd, 3> x{as_surd(s.x[0]), as_surd(s.x[1]), as_surd(s.x[2])};
    if (!exactly_einstein(a, x)) throw IntegrityError("exact candidate fails r1 = r2 = r3");
    s.einstein_constant_sign = to_sign(cleared_ricci(a, x)[0].sign());
    s.residual_bound = Rational(0);
    return;
  }
  for (auto& c : s.x) c = refine(c, kResidualWidth);
  s.einstein_constant_sign = ConstantSign::Undetermined;
  Rational w = Rational::pow2(-20);
  for (int round = 0; round < 16; ++round, w *= Rational::pow2(-16)) {
    const int sg = cleared_ricci(a, box(s.x, w))[0].certain_sign();
    if (sg != 0) {
      s.einstein_constant_sign = to_sign(sg);
      break;
    }
  }
  s.residual_bound = midpoint_residual(a, s.x);
}

EinsteinSolution make_exact(Branch b, const std::array<QuadraticSurd, 3>& raw) {
  // scale so x1 = 1
  const QuadraticSurd x1 = raw[0];
  EinsteinSolution s;
  s.branch = b;
  for (size_t t = 0; t < 3; ++t) s.x[t] = exact_coordinate(raw[t] / x1);
  return s;
}

bool same_exact(const EinsteinSolution& p, const EinsteinSolution& q) {
  if (!p.exact() || !q.exact()) return false;
  for (size_t t = 0; t < 3; ++t)
    if (compare(as_surd(p.x[t]), as_surd(q.x[t])) != std::strong_ordering::equal) return false;
  return true;
}

std::vector<QuadraticSurd> positive_roots(const Rational& a2, const Rational& a1, const Rational& a0) {
  std::vector<QuadraticSurd> out;
  if (a2.is_zero()) {
    if (a1.is_zero()) return out;
    const Rational r = -a0 / a1;
    if (r.sign() > 0) out.emplace_back(r);
    return out;
  }
  for (auto& r : QuadraticSurd::quadratic_roots(a2, a1, a0))
    if (r.sign() > 0) out.push_back(r);
  return out;
}

// a_i = a_j, k the remaining index (0-based).
std::vector<EinsteinSolution> solve_equal_pair(const Triple& a, size_t i, size_t j, size_t k) {
  std::vector<EinsteinSolution> out;
  const Rational one(1), two(2);

  // x_i = x_j = t x_k
  {
    const Rational lead = one - two * a[k];
    const Rational c0 = a[i] + a[k];
    if (lead.sign() > 0) {
      const auto all = QuadraticSurd::quadratic_roots(lead, Rational(-1), c0);
      for (const auto& r : all)
        if (r.sign() <= 0) throw IntegrityError("equal-pair quadratic has a nonpositive root");
    }
    for (const auto& t : positive_roots(lead, Rational(-1), c0)) {
      std::array<QuadraticSurd, 3> x;
      x[i] = t;
      x[j] = t;
      x[k] = QuadraticSurd(one);
      out.push_back(make_exact(Branch::EqualPairLinear, x));
    }
  }

  // x_k = 2 a_i (x_i + x_j), u = x_i / x_j
  {
    const Rational c = (a[i] + a[k]) * (one - Rational(4) * a[i] * a[i]);
    const Rational b = one - two * a[i] + Rational(8) * a[i] * a[i] * (a[i] + a[k]);
    if (!c.is_zero()) {
      for (const auto& u : positive_roots(c, -b, c)) {
        std::array<QuadraticSurd, 3> x;
        x[i] = u;
        x[j] = QuadraticSurd(one);
        x[k] = QuadraticSurd(two * a[i]) * (u + QuadraticSurd(one));
        EinsteinSolution s = make_exact(Branch::EqualPairSum, x);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) { return same_exact(o, s); });
        if (!dup) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<EinsteinSolution> solve_all_equal(const Rational& a) {
  std::vector<EinsteinSolution> out;
  out.push_back(make_exact(Branch::Standard, {QuadraticSurd(1), QuadraticSurd(1), QuadraticSurd(1)}));
  if (a == Rational(1, 4) || a == kHalf) return out;
  const Rational s = Rational(2) * a / (Rational(1) - Rational(2) * a);
  const Rational one(1);
  out.push_back(make_exact(Branch::EqualPairLinear, {one, s, s}));
  out.push_back(make_exact(Branch::EqualPairLinear, {one, s.inverse(), one}));
  out.push_back(make_exact(Branch::EqualPairLinear, {one, one, s.inverse()}));
  return out;
}

// x2 = Q(x3) / P(x3) on the eliminant's roots.
struct Backsub {
  Polynomial P, Q;
};

Backsub back_substitution(const BiPolynomial& F, const BiPolynomial& G) {
  const Rational f2 = F.coeff_in(Var::X, 2).coeff(0);
  const Rational g2 = G.coeff_in(Var::X, 2).coeff(0);
  Backsub b;
  b.P = g2 * F.coeff_in(Var::X, 1) - f2 * G.coeff_in(Var::X, 1);
  b.Q = -(g2 * F.coeff_in(Var::X, 0) - f2 * G.coeff_in(Var::X, 0));
  if (b.P.is_zero()) throw IntegrityError("back-substitution lost x2");
  return b;
}

std::vector<EinsteinSolution> solve_generic(const Triple& a) {
  std::vector<EinsteinSolution> out;
  const auto [F, G] = einstein_system(a);
  Polynomial U = einstein_eliminant(a);
  if (U.is_zero()) throw IntegrityError("eliminant vanishes identically");
  U = squarefree_part(U);
  const Backsub bs = back_substitution(F, G);

  // Roots of U that also kill P: solve F(x2, rho) = 0 directly.
  if (bs.P.degree() == 1) {
    const Rational rho = -bs.P.coeff(0) / bs.P.coeff(1);
    if (U.sign_at(rho) == 0) {
      if (rho.sign() > 0) {
        const Polynomial fx = F.substitute(Var::Y, rho);
        const Polynomial gx = G.substitute(Var::Y, rho);
        for (const auto& x2 : positive_roots(fx.coeff(2), fx.coeff(1), fx.coeff(0))) {
          const QuadraticSurd gv =
              QuadraticSurd(gx.coeff(2)) * x2 * x2 + QuadraticSurd(gx.coeff(1)) * x2 + QuadraticSurd(gx.coeff(0));
          if (gv.sign() != 0) continue;
          out.push_back(make_exact(Branch::Generic, {QuadraticSurd(1), x2, QuadraticSurd(rho)}));
        }
      }
      U = (U / Polynomial{-rho, Rational(1)}).primitive();
    }
  }
  if (U.degree() < 1) return out;

  const Polynomial qgcd = gcd(U, bs.Q);
  const Polynomial V = [&] {
    // V(y) = Res_t(U(t), P(t) y - Q(t)) vanishes at every x2 = Q/P
    const BiPolynomial py = BiPolynomial::lift(bs.P, Var::X) * BiPolynomial::var(Var::Y) -
                            BiPolynomial::lift(bs.Q, Var::X);
    return squarefree_part(resultant(BiPolynomial::lift(U, Var::X), py, Var::X));
  }();

  for (IsolatingInterval iv : isolate_real_roots(U, Endpoint(0), Endpoint::pos_inf())) {
    if (!iv.exact && qgcd.degree() >= 1 && count_real_roots(qgcd, iv.lo, iv.hi) >= 1) continue;  // x2 = 0
    bool done = false;
    for (int round = 0; round < 4000 && !done; ++round) {
      if (iv.exact) {
        const Rational x3 = *iv.exact;
        const Rational x2 = bs.Q.eval(x3) / bs.P.eval(x3);
        if (x2.sign() > 0) out.push_back(make_exact(Branch::Generic, {Rational(1), x2, x3}));
        done = true;
        break;
      }
      const RationalInterval I = iv.enclosure();
      const RationalInterval pI = eval(bs.P, I), qI = eval(bs.Q, I);
      if (pI.contains_zero() || qI.contains_zero()) {
        iv = refine_root(iv, iv.width() / Rational(2));
        continue;
      }
      if (pI.certain_sign() * qI.certain_sign() < 0) {
        done = true;
        break;
      }
      const RationalInterval J = qI / pI;
      if (J.lo == J.hi) {
        EinsteinSolution s;
        s.branch = Branch::Generic;
        s.x = {Rational(1), J.lo, iv};
        out.push_back(std::move(s));
        done = true;
        break;
      }
      if (V.sign_at(J.lo) != 0 && V.sign_at(J.hi) != 0 && count_real_roots(V, J.lo, J.hi) == 1) {
        EinsteinSolution s;
        s.branch = Branch::Generic;
        s.x = {Rational(1), IsolatingInterval{J.lo, J.hi, V, std::nullopt}, iv};
        out.push_back(std::move(s));
        done = true;
        break;
      }
      iv = refine_root(iv, iv.width() / Rational(2));
    }
    if (!done) throw IntegrityError("could not certify x2 for an eliminant root");
  }
  return out;
}

BiPolynomial partial(const BiPolynomial& p, Var v) {
  BiPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    const int k = v == Var::X ? e.first : e.second;
    if (k == 0) continue;
    BiPolynomial term = BiPolynomial::constant(c * Rational(k));
    for (int t = 0; t < e.first - (v == Var::X); ++t) term *= BiPolynomial::var(Var::X);
    for (int t = 0; t < e.second - (v == Var::Y); ++t) term *= BiPolynomial::var(Var::Y);
    out += term;
  }
  return out;
}

template <class T>
T eval_bi(const BiPolynomial& p, const T& x, const T& y) {
  T acc(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    T term(c);
    for (int t = 0; t < e.first; ++t) term = term * x;
    for (int t = 0; t < e.second; ++t) term = term * y;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

int jacobian_sign(const Triple& a, const EinsteinSolution& s) {
  const auto [F, G] = einstein_system(a);
  const BiPolynomial fx = partial(F, Var::X), fy = partial(F, Var::Y);
  const BiPolynomial gx = partial(G, Var::X), gy = partial(G, Var::Y);
  if (s.exact()) {
    const QuadraticSurd x = as_surd(s.x[1]) / as_surd(s.x[0]), y = as_surd(s.x[2]) / as_surd(s.x[0]);
    const QuadraticSurd det = eval_bi(fx, x, y) * eval_bi(gy, x, y) - eval_bi(fy, x, y) * eval_bi(gx, x, y);
    return det.sign();
  }
  Rational w = kResidualWidth;
  for (int round = 0; round < 8; ++round, w *= Rational::pow2(-32)) {
    const auto b = box(s.x, w);
    const RationalInterval x = b[1] / b[0], y = b[2] / b[0];
    const RationalInterval det = eval_bi(fx, x, y) * eval_bi(gy, x, y) - eval_bi(fy, x, y) * eval_bi(gx, x, y);
    if (det.certain_sign() != 0) return det.certain_sign();
  }
  return 0;
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::Standard: return "standard";
    case Branch::EqualPairLinear: return "equal-pair-linear";
    case Branch::EqualPairSum: return "equal-pair-sum";
    case Branch::Generic: return "generic";
  }
  return "?";
}

std::string sign_name(ConstantSign s) {
  switch (s) {
    case ConstantSign::Positive: return "positive";
    case ConstantSign::Zero: return "zero";
    case ConstantSign::Negative: return "negative";
    case ConstantSign::Undetermined: return "undetermined";
  }
  return "?";
}

bool is_exact(const Coordinate& c) {
  if (const auto* iv = std::get_if<IsolatingInterval>(&c)) return iv->exact.has_value();
  return true;
}

bool EinsteinSolution::exact() const {
  return std::all_of(x.begin(), x.end(), [](const Coordinate& c) { return is_exact(c); });
}

std::array<Rational, 3> ricci_coefficients(const Triple& a, const Triple& x) {
  for (const auto& v : x)
    if (v.sign() <= 0) throw InvalidArgument("metric parameters must be positive");
  const auto R = cleared_ricci(a, x);
  const Rational denom = Rational(2) * x[0] * x[1] * x[2];
  return {R[0] / denom, R[1] / denom, R[2] / denom};
}

std::array<RationalInterval, 3> ricci_coefficients(const Triple& a, const std::array<RationalInterval, 3>& x) {
  const auto R = cleared_ricci(a, x);
  const RationalInterval denom = RationalInterval(Rational(2)) * x[0] * x[1] * x[2];
  return {R[0] / denom, R[1] / denom, R[2] / denom};
}

std::pair<BiPolynomial, BiPolynomial> einstein_system(const Triple& a) {
  const BiPolynomial one = BiPolynomial::constant(Rational(1));
  const BiPolynomial x2 = BiPolynomial::var(Var::X), x3 = BiPolynomial::var(Var::Y);
  const std::array<BiPolynomial, 3> x{one, x2, x3};
  std::array<BiPolynomial, 3> R;
  for (size_t i = 0; i < 3; ++i) {
    const size_t j = (i + 1) % 3, k = (i + 2) % 3;
    R[i] = x[j] * x[k] + a[i] * (x[i] * x[i] - x[j] * x[j] - x[k] * x[k]);
  }
  return {R[0] - R[1], R[0] - R[2]};
}

Polynomial einstein_eliminant(const Triple& a) {
  const auto [F, G] = einstein_system(a);
  return resultant(F, G, Var::X);
}

std::vector<EinsteinSolution> solve_einstein(const Triple& a) {
  for (const auto& v : a)
    if (v.sign() <= 0 || v > kHalf) throw InvalidArgument("each a_i must lie in (0, 1/2], got " + v.str());

  std::vector<EinsteinSolution> out;
  if (a[0] == a[1] && a[1] == a[2]) {
    out = solve_all_equal(a[0]);
  } else if (a[0] == a[1]) {
    out = solve_equal_pair(a, 0, 1, 2);
  } else if (a[0] == a[2]) {
    out = solve_equal_pair(a, 0, 2, 1);
  } else if (a[1] == a[2]) {
    out = solve_equal_pair(a, 1, 2, 0);
  } else {
    out = solve_generic(a);
  }

  for (auto& s : out) finish(a, s);
  std::vector<std::tuple<int, Rational, Rational>> keys;
  std::vector<size_t> order(out.size());
  for (size_t t = 0; t < out.size(); ++t) {
    order[t] = t;
    keys.emplace_back(branch_rank(out[t].branch), midpoint(out[t].x[1]), midpoint(out[t].x[2]));
  }
  std::stable_sort(order.begin(), order.end(), [&](size_t p, size_t q) { return keys[p] < keys[q]; });
  std::vector<EinsteinSolution> sorted;
  sorted.reserve(out.size());
  for (size_t t : order) sorted.push_back(std::move(out[t]));
  return sorted;
}

CaseSolutions solve_case(const SpaceCase& c) {
  CaseSolutions out;
  out.space = c;
  out.iso = coefficients_for_case(c);
  if (c.flagged) {
    out.applicable = false;
    out.note = "two of the three summands are equivalent h-modules, so invariant metrics need not be diagonal";
    return out;
  }
  out.solutions = solve_einstein(out.iso.a);
  return out;
}

bool verify_solution(const Triple& a, const EinsteinSolution& sol, const Rational& tol) {
  try {
    if (sol.exact()) {
      const std::array<QuadraticSurd, 3> x{as_surd(sol.x[0]), as_surd(sol.x[1]), as_surd(sol.x[2])};
      for (const auto& v : x)
        if (v.sign() <= 0) return false;
      return exactly_einstein(a, x);
    }
    for (const auto& c : sol.x) {
      const auto* iv = std::get_if<IsolatingInterval>(&c);
      if (!iv) continue;
      if (iv->exact) {
        if (iv->poly.sign_at(*iv->exact) != 0) return false;
      } else if (iv->poly.sign_at(iv->lo) * iv->poly.sign_at(iv->hi) >= 0 ||
                 count_real_roots(iv->poly, iv->lo, iv->hi) != 1) {
        return false;
      }
    }
    Rational w = Rational::pow2(-8);
    for (int round = 0; round < 60; ++round, w *= Rational::pow2(-8)) {
      const auto b = box(sol.x, w);
      for (const auto& v : b)
        if (v.hi.sign() <= 0) return false;
      const auto R = cleared_ricci(a, b);
      if ((R[0] - R[1]).certain_sign() != 0 || (R[0] - R[2]).certain_sign() != 0) return false;
      std::array<Coordinate, 3> refined{refine(sol.x[0], w), refine(sol.x[1], w), refine(sol.x[2], w)};
      const Triple m = midpoints(refined);
      if (std::any_of(m.begin(), m.end(), [](const Rational& v) { return v.sign() <= 0; })) continue;
      if (midpoint_residual(a, refined) < tol) return true;
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

Coordinate refine(const Coordinate& c, const Rational& width) {
  if (const auto* iv = std::get_if<IsolatingInterval>(&c)) {
    if (iv->exact || iv->width() <= width) return c;
    return refine_root(*iv, width);
  }
  return c;
}

RationalInterval enclosure(const Coordinate& c, const Rational& width) {
  if (const auto* r = std::get_if<Rational>(&c)) return *r;
  if (const auto* s = std::get_if<QuadraticSurd>(&c)) return s->enclosure(width);
  return std::get<IsolatingInterval>(refine(c, width)).enclosure();
}

Rational midpoint(const Coordinate& c) {
  if (const auto* r = std::get_if<Rational>(&c)) return *r;
  if (const auto* s = std::get_if<QuadraticSurd>(&c)) {
    if (s->is_rational()) return s->p();
    return s->enclosure(Rational::pow2(-128)).midpoint();
  }
  return std::get<IsolatingInterval>(c).midpoint();
}

EinsteinSolution refine(const EinsteinSolution& s, const Triple& a, const Rational& width) {
  EinsteinSolution out = s;
  for (auto& c : out.x) c = refine(c, width);
  if (!out.exact()) out.residual_bound = midpoint_residual(a, out.x);
  return out;
}

std::string to_decimal(const Coordinate& c, int digits) {
  if (const auto* r = std::get_if<Rational>(&c)) return r->to_decimal(digits);
  if (const auto* s = std::get_if<QuadraticSurd>(&c)) return s->to_decimal(digits);
  const auto& iv = std::get<IsolatingInterval>(c);
  if (iv.exact) return iv.exact->to_decimal(digits);
  return decimal_from_enclosures([&](const Rational& w) { return enclosure(c, w); }, digits);
}

}  // namespace trisym
