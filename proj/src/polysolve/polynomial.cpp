#include "trisym/polysolve/polynomial.hpp"

#include <sstream>

#include "trisym/numeric/errors.hpp"

namespace trisym {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

Polynomial Polynomial::from_descending(const std::vector<Rational>& descending) {
  return Polynomial(std::vector<Rational>(descending.rbegin(), descending.rend()));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::x() { return monomial(1, 1); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of zero polynomial");
  return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  const int s = leading().sign();
  return (positive || degree() % 2 == 0) ? s : -s;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(c_.size());
  BigInt g = 0;
  for (const auto& c : c_) {
    BigInt v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(BigInt(v / g));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(const Rational& s) const {
  // Horner in polynomial arithmetic: p(x+s) = (...(c_n (x+s) + c_{n-1})(x+s) ...)
  Polynomial out;
  const Polynomial lin{s, Rational(1)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out *= lin;
    out += constant(*it);
  }
  return out;
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> v = c_;
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial{}, *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(static_cast<size_t>(degree() - d.degree()) + 1);
  const Rational inv = d.leading().inverse();
  const int dd = d.degree();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<size_t>(k + dd)] * inv;
    quot[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= q * d.c_[static_cast<size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1)) os << mag.str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<std::string> Polynomial::wire() const {
  std::vector<std::string> out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out.push_back(it->wire());
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree part of zero polynomial");
  if (p.degree() <= 0) return Polynomial::constant(1);
  const Polynomial g = gcd(p, p.derivative());
  return (p / g).primitive();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree decomposition of zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() <= 0) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = f / a;
  Polynomial c = df / a;
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.primitive(), i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.monic() == q.monic();
}

}  // namespace trisym
