#include "trisym/polysolve/surd.hpp"

#include "trisym/numeric/errors.hpp"

namespace trisym {

namespace {

// n = s^2 * core with core squarefree; trial division is plenty for the
// discriminants that occur here.
std::pair<BigInt, BigInt> split_square(BigInt n) {
  BigInt s = 1;
  BigInt core = 1;
  for (BigInt f = 2; f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= f;
    if (e % 2) core *= f;
  }
  core *= n;
  return {s, core};
}

int sign_of_sum(int a, int b) { return a == 0 ? b : a; }

}  // namespace

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw InvalidArgument("isqrt of negative");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

QuadraticSurd::QuadraticSurd(Rational p, Rational q, BigInt d) : p_(std::move(p)), q_(std::move(q)) {
  if (sgn(d) < 0) throw InvalidArgument("negative radicand");
  if (d == 0 || q_.is_zero()) {
    q_ = Rational(0);
    d_ = 1;
    return;
  }
  auto [s, core] = split_square(d);
  q_ *= Rational(s);
  d_ = core;
  if (d_ == 1) {
    p_ += q_;
    q_ = Rational(0);
  }
}

std::vector<QuadraticSurd> QuadraticSurd::quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw InvalidArgument("quadratic_roots needs a nonzero leading coefficient");
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return {};
  const Rational p = -b / (Rational(2) * a);
  if (disc.is_zero()) return {QuadraticSurd(p)};
  // sqrt(n/m) = sqrt(n*m)/m
  const BigInt n = disc.num() * disc.den();
  const Rational scale = Rational(BigInt(1), disc.den()) / (Rational(2) * a);
  QuadraticSurd r1(p, scale, n);
  QuadraticSurd r2(p, -scale, n);
  if (r2 < r1) std::swap(r1, r2);
  return {r1, r2};
}

int QuadraticSurd::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sign_of_sum(sp, sq);
  // opposite signs: compare p^2 with q^2 D
  const Rational diff = p_ * p_ - q_ * q_ * Rational(d_);
  return diff.sign() > 0 ? sp : (diff.sign() < 0 ? sq : 0);
}

void QuadraticSurd::unify(const QuadraticSurd& o) const {
  if (!is_rational() && !o.is_rational() && d_ != o.d_) {
    throw InvalidArgument("arithmetic across different quadratic fields: sqrt(" + d_.get_str() + ") and sqrt(" +
                          o.d_.get_str() + ")");
  }
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  unify(o);
  const BigInt d = is_rational() ? o.d_ : d_;
  *this = QuadraticSurd(p_ + o.p_, q_ + o.q_, d);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) { return *this += -o; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  unify(o);
  const BigInt d = is_rational() ? o.d_ : d_;
  const Rational rd(d);
  *this = QuadraticSurd(p_ * o.p_ + q_ * o.q_ * rd, p_ * o.q_ + q_ * o.p_, d);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
  unify(o);
  if (o.sign() == 0) throw InvalidArgument("division by zero surd");
  const Rational norm = o.p_ * o.p_ - o.q_ * o.q_ * Rational(o.d_);
  QuadraticSurd r = *this * o.conjugate();
  *this = QuadraticSurd(r.p_ / norm, r.q_ / norm, r.d_);
  return *this;
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-p_, -q_, d_); }

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(p_, -q_, d_); }

std::strong_ordering compare(const QuadraticSurd& a, const QuadraticSurd& b) {
  auto from_sign = [](int s) {
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (a.is_rational() || b.is_rational() || a.d_ == b.d_) return from_sign((a - b).sign());
  // a - b = u - w with u = (a.p - b.p) + a.q sqrt(Da), w = b.q sqrt(Db)
  const QuadraticSurd u(a.p_ - b.p_, a.q_, a.d_);
  const int su = u.sign();
  const int sw = b.q_.sign();
  if (su != sw) return from_sign(su - sw);
  // same strict sign s: sign(u - w) = s * sign(u^2 - w^2)
  const QuadraticSurd diff = u * u - QuadraticSurd(b.q_ * b.q_ * Rational(b.d_));
  return from_sign(su * diff.sign());
}

RationalInterval QuadraticSurd::enclosure(const Rational& width) const {
  if (is_rational()) return RationalInterval(p_);
  // sqrt(D) in [r/2^k, (r+1)/2^k) with r = isqrt(D*4^k); pick k so |q|/2^k <= width
  const Rational target = width / q_.abs();
  int k = 0;
  while (Rational::pow2(-k) > target) ++k;
  BigInt scaled = d_;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k));
  const BigInt r = isqrt(scaled);
  const Rational scale = Rational::pow2(-k);
  const RationalInterval root(Rational(r) * scale, Rational(BigInt(r + 1)) * scale);
  return RationalInterval(p_) + RationalInterval(q_) * root;
}

std::string QuadraticSurd::to_decimal(int digits) const {
  if (is_rational()) return p_.to_decimal(digits);
  return decimal_from_enclosures([this](const Rational& w) { return enclosure(w); }, digits);
}

std::string QuadraticSurd::str() const {
  if (is_rational()) return p_.str();
  std::string out = p_.is_zero() ? "" : p_.str() + (q_.sign() < 0 ? " - " : " + ");
  if (p_.is_zero() && q_.sign() < 0) out += "-";
  const Rational mag = q_.abs();
  if (mag != Rational(1)) out += mag.str() + "*";
  return out + "sqrt(" + d_.get_str() + ")";
}

}  // namespace trisym
