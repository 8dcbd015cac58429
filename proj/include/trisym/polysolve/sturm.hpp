#ifndef TRISYM_POLYSOLVE_STURM_HPP
#define TRISYM_POLYSOLVE_STURM_HPP

#include <optional>
#include <string>
#include <vector>

#include "trisym/numeric/rational.hpp"
#include "trisym/polysolve/interval.hpp"
#include "trisym/polysolve/polynomial.hpp"

namespace trisym {

/// An interval endpoint that may be infinite.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Endpoint neg_inf() { return {Kind::NegInf, {}}; }
  static Endpoint pos_inf() { return {Kind::PosInf, {}}; }
  static Endpoint at(Rational v) { return {Kind::Finite, std::move(v)}; }
  Endpoint() = default;
  Endpoint(Kind k, Rational v) : kind(k), value(std::move(v)) {}
  Endpoint(Rational v) : value(std::move(v)) {}  // NOLINT: finite endpoints read naturally
  Endpoint(long v) : value(v) {}                 // NOLINT

  bool finite() const { return kind == Kind::Finite; }
  std::string str() const;
};

/// S0 = p, S1 = p', S_{k+1} = -rem(S_{k-1}, S_k) until the remainder vanishes.
/// The last entry is gcd(p, p') up to a constant, hence a constant for
/// squarefree p.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Sign variations of the chain at a point, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Endpoint& at);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// A root sitting on a finite endpoint is not counted and does not need
/// to be moved: the one-sided limit of the chain's signs is used there.
int count_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi);

/// (lo, hi) containing exactly one root of the squarefree poly. Either
/// poly changes sign strictly across the endpoints, or `exact` holds the
/// root itself (found when a bisection point hit it).
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  Polynomial poly;
  std::optional<Rational> exact;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return exact ? *exact : (lo + hi) / Rational(2); }
  RationalInterval enclosure() const {
    return exact ? RationalInterval(*exact) : RationalInterval(lo, hi);
  }
};

/// One isolating interval per distinct real root in (lo, hi), sorted and
/// pairwise disjoint. Infinite endpoints are replaced by a Cauchy bound.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi);

/// Deterministic bisection until hi - lo <= width. The result is nested in
/// the input and brackets the same root.
IsolatingInterval refine_root(const IsolatingInterval& iv, const Rational& width);

/// Strict upper bound on |root| for every complex root of nonzero p.
Rational cauchy_bound(const Polynomial& p);

}  // namespace trisym

#endif  // TRISYM_POLYSOLVE_STURM_HPP
