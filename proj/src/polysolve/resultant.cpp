#include "trisym/polysolve/resultant.hpp"

#include <algorithm>
#include <sstream>

#include "trisym/numeric/errors.hpp"

namespace trisym {

namespace {

Var other(Var v) { return v == Var::X ? Var::Y : Var::X; }

std::vector<std::vector<Rational>> sylvester(const std::vector<Rational>& p, int m, const std::vector<Rational>& q,
                                             int n) {
  // p, q ascending with formal degrees m, n (entries past the real degree are 0).
  const int size = m + n;
  std::vector<std::vector<Rational>> s(static_cast<size_t>(size), std::vector<Rational>(static_cast<size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = p[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = q[static_cast<size_t>(n - k)];
  return s;
}

std::vector<Rational> padded(const Polynomial& p, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i)] = p.coeff(i);
  return v;
}

// Newton interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const size_t n = xs.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
  Polynomial out;
  for (size_t k = n; k-- > 0;) {
    out *= Polynomial{-xs[k], Rational(1)};
    out += Polynomial::constant(ys[k]);
  }
  return out;
}

}  // namespace

BiPolynomial BiPolynomial::constant(const Rational& c) {
  BiPolynomial b;
  b.add_term(0, 0, c);
  return b;
}

BiPolynomial BiPolynomial::var(Var v) {
  BiPolynomial b;
  if (v == Var::X) {
    b.add_term(1, 0, 1);
  } else {
    b.add_term(0, 1, 1);
  }
  return b;
}

BiPolynomial BiPolynomial::lift(const Polynomial& p, Var v) {
  BiPolynomial b;
  for (int i = 0; i <= p.degree(); ++i) {
    if (v == Var::X) {
      b.add_term(i, 0, p.coeff(i));
    } else {
      b.add_term(0, i, p.coeff(i));
    }
  }
  return b;
}

void BiPolynomial::add_term(int ex, int ey, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({ex, ey}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BiPolynomial::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::X ? e.first : e.second);
  return d;
}

Rational BiPolynomial::coeff(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial BiPolynomial::coeff_in(Var v, int k) const {
  std::vector<Rational> out(static_cast<size_t>(std::max(degree(other(v)), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    const int ev = v == Var::X ? e.first : e.second;
    const int eo = v == Var::X ? e.second : e.first;
    if (ev == k) out[static_cast<size_t>(eo)] += c;
  }
  return Polynomial(std::move(out));
}

Polynomial BiPolynomial::substitute(Var v, const Rational& value) const {
  std::vector<Rational> out(static_cast<size_t>(std::max(degree(other(v)), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    const int ev = v == Var::X ? e.first : e.second;
    const int eo = v == Var::X ? e.second : e.first;
    out[static_cast<size_t>(eo)] += c * value.pow(static_cast<unsigned>(ev));
  }
  return Polynomial(std::move(out));
}

Rational BiPolynomial::eval(const Rational& x, const Rational& y) const {
  return substitute(Var::X, x).eval(y);
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(const BiPolynomial& o) {
  BiPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
  *this = std::move(r);
  return *this;
}

BiPolynomial operator*(const Rational& s, const BiPolynomial& b) {
  BiPolynomial r;
  for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, s * c);
  return r;
}

std::string BiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1) && (e.first + e.second) > 0;
    if (!unit) os << mag.str();
    bool need_star = !unit;
    if (e.first > 0) {
      os << (need_star ? "*" : "") << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
      need_star = true;
    }
    if (e.second > 0) os << (need_star ? "*" : "") << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] * inv;
      for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidArgument("resultant with a zero polynomial");
  const int m = p.degree();
  const int n = q.degree();
  if (m + n == 0) return Rational(1);
  return determinant(sylvester(padded(p, m), m, padded(q, n), n));
}

Polynomial resultant(const BiPolynomial& p, const BiPolynomial& q, Var eliminate) {
  if (p.is_zero() || q.is_zero()) throw InvalidArgument("resultant with a zero polynomial");
  const int m = p.degree(eliminate);
  const int n = q.degree(eliminate);
  if (m <= 0 || n <= 0) throw InvalidArgument("resultant needs positive degree in the eliminated variable");
  const Var keep = other(eliminate);

  // deg_keep(Res) <= m * deg_keep(q) + n * deg_keep(p)
  const int bound = m * std::max(q.degree(keep), 0) + n * std::max(p.degree(keep), 0);

  std::vector<Polynomial> pc, qc;
  for (int k = 0; k <= m; ++k) pc.push_back(p.coeff_in(eliminate, k));
  for (int k = 0; k <= n; ++k) qc.push_back(q.coeff_in(eliminate, k));

  std::vector<Rational> xs, ys;
  for (int t = 0; t <= bound; ++t) {
    const Rational x(t);
    std::vector<Rational> pv, qv;
    for (const auto& c : pc) pv.push_back(c.eval(x));
    for (const auto& c : qc) qv.push_back(c.eval(x));
    xs.push_back(x);
    ys.push_back(determinant(sylvester(pv, m, qv, n)));
  }
  return interpolate(xs, ys);
}

}  // namespace trisym
