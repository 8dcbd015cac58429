#include "trisym/polysolve/sturm.hpp"

#include <algorithm>

#include "trisym/numeric/errors.hpp"

namespace trisym {

namespace {

int sign_of(const Polynomial& p, const Endpoint& at) {
  switch (at.kind) {
    case Endpoint::Kind::NegInf:
      return p.sign_at_infinity(false);
    case Endpoint::Kind::PosInf:
      return p.sign_at_infinity(true);
    case Endpoint::Kind::Finite:
      break;
  }
  return p.sign_at(at.value);
}

int variations_from(const std::vector<Polynomial>& chain, size_t first, const Endpoint& at) {
  int count = 0;
  int last = 0;
  for (size_t k = first; k < chain.size(); ++k) {
    const int s = sign_of(chain[k], at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

bool before(const Endpoint& a, const Endpoint& b) {
  if (a.kind == Endpoint::Kind::PosInf || b.kind == Endpoint::Kind::NegInf) return false;
  if (a.kind == Endpoint::Kind::NegInf || b.kind == Endpoint::Kind::PosInf) return true;
  return a.value < b.value;
}

// Sturm count for an already squarefree q with its chain.
int count_with_chain(const Polynomial& q, const std::vector<Polynomial>& chain, const Endpoint& lo,
                     const Endpoint& hi) {
  // Just right of a root of q, q and q' share a sign; just left they differ.
  const int v_lo = (lo.finite() && q.sign_at(lo.value) == 0) ? variations_from(chain, 1, lo)
                                                             : variations_from(chain, 0, lo);
  const int v_hi = (hi.finite() && q.sign_at(hi.value) == 0) ? 1 + variations_from(chain, 1, hi)
                                                             : variations_from(chain, 0, hi);
  return v_lo - v_hi;
}

struct Squarefree {
  Polynomial q;
  std::vector<Polynomial> chain;
};

Squarefree prepare(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("root counting on the zero polynomial");
  Squarefree s;
  s.q = squarefree_part(p);
  s.chain = sturm_sequence(s.q);
  return s;
}

IsolatingInterval settle_single(const Squarefree& s, Rational a, Rational b) {
  // (a, b) holds exactly one root; move root-valued endpoints inward.
  while (s.q.sign_at(a) == 0 || s.q.sign_at(b) == 0) {
    const Rational m = (a + b) / Rational(2);
    if (s.q.sign_at(m) == 0) {
      return IsolatingInterval{(a + m) / Rational(2), (m + b) / Rational(2), s.q, m};
    }
    if (count_with_chain(s.q, s.chain, a, m) == 1) {
      b = m;
    } else {
      a = m;
    }
  }
  return IsolatingInterval{std::move(a), std::move(b), s.q, std::nullopt};
}

}  // namespace

std::string Endpoint::str() const {
  switch (kind) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return value.str();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
  std::vector<Polynomial> chain{p};
  Polynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    Polynomial r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Endpoint& at) {
  return variations_from(chain, 0, at);
}

int count_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi) {
  if (!before(lo, hi)) throw InvalidArgument("degenerate interval (" + lo.str() + ", " + hi.str() + ")");
  const Squarefree s = prepare(p);
  if (s.q.degree() <= 0) return 0;
  return count_with_chain(s.q, s.chain, lo, hi);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("Cauchy bound of the zero polynomial");
  Rational m;
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs() / lead);
  return m + Rational(1);
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi) {
  if (!before(lo, hi)) throw InvalidArgument("degenerate interval (" + lo.str() + ", " + hi.str() + ")");
  const Squarefree s = prepare(p);
  std::vector<IsolatingInterval> out;
  if (s.q.degree() <= 0) return out;

  const Rational bound = cauchy_bound(s.q);
  Rational a = lo.finite() ? std::max(lo.value, -bound) : -bound;
  Rational b = hi.finite() ? std::min(hi.value, bound) : bound;
  if (!(a < b)) return out;

  struct Piece {
    Rational a, b;
    int n;
  };
  std::vector<Piece> work;
  const int total = count_with_chain(s.q, s.chain, a, b);
  if (total > 0) work.push_back({a, b, total});

  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();
    if (piece.n == 1) {
      out.push_back(settle_single(s, piece.a, piece.b));
      continue;
    }
    // Split at a non-root point, trying 1/2, 1/3, 2/3, 1/4, 3/4, ...
    Rational m;
    bool found = false;
    for (long den = 2; !found; ++den) {
      for (long k = 1; k < den && !found; ++k) {
        m = piece.a + (piece.b - piece.a) * Rational(k, den);
        found = s.q.sign_at(m) != 0;
      }
    }
    const int left = count_with_chain(s.q, s.chain, piece.a, m);
    if (piece.n - left > 0) work.push_back({m, piece.b, piece.n - left});
    if (left > 0) work.push_back({piece.a, m, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

IsolatingInterval refine_root(const IsolatingInterval& iv, const Rational& width) {
  if (width.sign() <= 0) throw InvalidArgument("refinement width must be positive");
  IsolatingInterval r = iv;
  if (!r.exact && r.poly.sign_at(r.lo) == 0) throw InvalidArgument("isolating interval endpoint is a root");
  const int s_lo = r.exact ? 0 : r.poly.sign_at(r.lo);
  while (r.hi - r.lo > width) {
    if (r.exact) {
      r.lo = (r.lo + *r.exact) / Rational(2);
      r.hi = (*r.exact + r.hi) / Rational(2);
      continue;
    }
    const Rational m = (r.lo + r.hi) / Rational(2);
    const int sm = r.poly.sign_at(m);
    if (sm == 0) {
      r.exact = m;
    } else if (sm == s_lo) {
      r.lo = m;
    } else {
      r.hi = m;
    }
  }
  return r;
}

}  // namespace trisym
