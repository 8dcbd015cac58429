#include "trisym/coeffs/isotropy.hpp"

#include "trisym/numeric/errors.hpp"

namespace trisym {

bool IsotropyData::boundary() const {
  for (const auto& v : a)
    if (v == Rational(1, 2)) return true;
  return false;
}

Rational gamma_from_killing_ratio(const LieType& sub, const LieType& ambient, int embedding_index) {
  if (sub.is_torus() || ambient.is_torus()) throw Unsupported("Killing ratio needs simple algebras, got a torus");
  if (embedding_index < 1) throw InvalidArgument("embedding index must be positive");
  return Rational(dual_coxeter_number(sub.family, sub.rank), 1) /
         Rational(static_cast<long>(embedding_index) * dual_coxeter_number(ambient.family, ambient.rank));
}

IsotropyData derive_gammas(const std::array<long, 3>& dims, int anchor_index, const Rational& anchor_gamma,
                           bool allow_boundary) {
  for (long d : dims)
    if (d <= 0) throw InvalidArgument("dimensions must be positive");
  if (anchor_index < 1 || anchor_index > 3) throw InvalidArgument("anchor index must be 1, 2 or 3");
  const Rational one(1);
  const bool low_ok = allow_boundary ? anchor_gamma.sign() >= 0 : anchor_gamma.sign() > 0;
  if (!low_ok || anchor_gamma >= one) {
    throw InvalidArgument("anchor gamma " + anchor_gamma.str() + " outside " + (allow_boundary ? "[0, 1)" : "(0, 1)"));
  }

  IsotropyData out;
  out.dims = dims;
  out.A = Rational(dims[static_cast<size_t>(anchor_index - 1)]) * (one - anchor_gamma) / Rational(2);
  for (size_t t = 0; t < 3; ++t) {
    out.gammas[t] = one - Rational(2) * out.A / Rational(dims[t]);
    const int s = out.gammas[t].sign();
    if ((allow_boundary ? s < 0 : s <= 0) || out.gammas[t] >= one) {
      throw InconsistencyError("derived gamma_" + std::to_string(t + 1) + " = " + out.gammas[t].str() +
                               " is out of range; wrong anchor or wrong dimensions");
    }
    out.casimirs[t] = out.gammas[t] / Rational(2);
    out.a[t] = out.A / Rational(dims[t]);
  }
  return out;
}

std::vector<GammaAnchor> killing_ratio_anchors(const SpaceCase& c) {
  std::vector<GammaAnchor> out;
  for (size_t t = 0; t < 3; ++t) {
    if (!c.effective[t]) continue;
    const auto& e = *c.effective[t];
    out.push_back({static_cast<int>(t) + 1, gamma_from_killing_ratio(e.type, c.ambient, e.embedding_index),
                   "killing-ratio"});
  }
  return out;
}

GammaAnchor anchor_for_case(const SpaceCase& c) {
  switch (c.inp) {
    case 1:
      // h = 0, so every Casimir constant vanishes
      return {1, Rational(0), "tabulated"};
    case 2: {
      const long k = (c.params.at("l") + 1) / 2;
      return {2, Rational(k + 1, 2 * k), "tabulated"};
    }
    case 14: return {1, Rational(1, 2), "tabulated"};
    case 15: return {1, Rational(1, 2), "tabulated"};
    case 16: return {1, Rational(5, 9), "tabulated"};
    case 17: return {2, Rational(5, 9), "tabulated"};
    case 18: return {1, Rational(4, 9), "tabulated"};
    case 19: return {2, Rational(3, 5), "tabulated"};
    case 20: return {1, Rational(7, 15), "tabulated"};
    case 22: return {1, Rational(7, 9), "tabulated"};
    default: break;
  }
  if (c.flagged) {
    // h acts trivially on the one-dimensional summand: zero Casimir there
    const CaseDims dims = case_dims(c);
    for (size_t t = 0; t < 3; ++t)
      if (dims.d[t] == 1) return {static_cast<int>(t) + 1, Rational(0), "trivial-action"};
  }
  const auto ratios = killing_ratio_anchors(c);
  if (ratios.empty()) throw IntegrityError(c.display_name() + ": no block with a simple effective factor");
  return ratios.front();
}

IsotropyData coefficients_for_case(const SpaceCase& c) {
  const CaseDims dims = case_dims(c);
  const GammaAnchor anchor = anchor_for_case(c);
  const bool allow_boundary = c.inp == 1 || c.flagged;
  return derive_gammas(dims.d, anchor.index, anchor.gamma, allow_boundary);
}

}  // namespace trisym
