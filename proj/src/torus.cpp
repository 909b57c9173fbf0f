#include "projaut/torus.hpp"

#include <algorithm>

namespace projaut {

const char* tau_class_name(TauClass t) {
  switch (t) {
    case TauClass::generic: return "generic";
    case TauClass::square: return "square";
    case TauClass::hexagonal: return "hexagonal";
  }
  return "?";
}

TauClass parse_tau_class(const std::string& name) {
  if (name == "generic") return TauClass::generic;
  if (name == "square") return TauClass::square;
  if (name == "hexagonal") return TauClass::hexagonal;
  fail(errc::bad_input, "unknown lattice class '" + name + "'");
}

const char* classification_name(TorusClassification c) {
  switch (c) {
    case TorusClassification::affine: return "Affine";
    case TorusClassification::projective_not_affine: return "ProjectiveNotAffine";
    case TorusClassification::not_projective: return "NotProjective";
  }
  return "?";
}

TorusAutomorphism TorusAutomorphism::translation_by(const Scalar& p) {
  return TorusAutomorphism{"T", Scalar::one(), p};
}

TorusAutomorphism TorusAutomorphism::involution() {
  return TorusAutomorphism{"J", Scalar(-1), Scalar::zero()};
}

TorusAutomorphism TorusAutomorphism::rotation(TauClass tau, long k) {
  Scalar gen;
  switch (tau) {
    case TauClass::generic: gen = Scalar(-1); break;
    case TauClass::square: gen = Scalar::i(); break;
    case TauClass::hexagonal: gen = -Scalar::omega(); break;  // primitive sixth root
  }
  Scalar a = Scalar::one();
  long order = tau == TauClass::generic ? 2 : (tau == TauClass::square ? 4 : 6);
  long e = ((k % order) + order) % order;
  for (long t = 0; t < e; ++t) a = a * gen;
  return TorusAutomorphism{"R" + std::to_string(e), a, Scalar::zero()};
}

std::vector<Scalar> multiplier_classes(TauClass tau) {
  long order = tau == TauClass::generic ? 2 : (tau == TauClass::square ? 4 : 6);
  std::vector<Scalar> out;
  for (long k = 0; k < order; ++k) out.push_back(TorusAutomorphism::rotation(tau, k).multiplier);
  return out;
}

namespace {

void require_admissible(const TorusAutomorphism& aut, TauClass tau) {
  std::vector<Scalar> classes = multiplier_classes(tau);
  for (const Scalar& a : classes)
    if (a == aut.multiplier) return;
  fail(errc::incompatible_multiplier,
       "multiplier " + aut.multiplier.str() + " is not admissible for a " +
           tau_class_name(tau) + " lattice");
}

}  // namespace

TorusClassification classify_by_formula(const Scalar& c, const TorusAutomorphism& aut,
                                        TauClass tau) {
  require_admissible(aut, tau);
  if (c.is_zero()) return TorusClassification::affine;
  if (aut.multiplier == Scalar::one()) return TorusClassification::affine;
  if (aut.multiplier == Scalar(-1)) return TorusClassification::projective_not_affine;
  return TorusClassification::not_projective;
}

TorusClassification classify_by_series(const Scalar& c, const TorusAutomorphism& aut,
                                       TauClass tau, int order,
                                       const Scalar* exact_dilation) {
  require_admissible(aut, tau);
  if (order < 8) fail(errc::insufficient_order, "series classification needs order >= 8");
  if (!c.is_exact()) fail(errc::unsupported_ring, "series pathway needs an exact parameter");

  Series h = Series::zero(order);
  if (c.is_zero()) {
    // Euclidean structure: the developing map is the identity and the
    // automorphism is its own local expression.
    std::vector<Scalar> coeffs(static_cast<size_t>(order) + 1, Scalar::zero());
    coeffs[0] = aut.translation;
    coeffs[1] = aut.multiplier;
    h = Series(std::move(coeffs));
  } else {
    // dev(z) = e^{cz} near z = 0, its inverse near u = 1. Writing u = 1 + w,
    // c * dev^{-1}(1+w) = log(1+w) is obtained by reverting e^w - 1, the
    // multiplier rescales it, and c cancels:
    //   e^{-cb} * dev(a dev^{-1}(1+w) + b) = exp(a log(1+w)).
    Series expm1 = Series::exponential(order) - Series::constant(Scalar::one(), order);
    Series log1p = revert(expm1);
    Series h0 = compose(expm1, aut.multiplier * log1p) +
                Series::constant(Scalar::one(), order);
    Scalar k = exact_dilation ? *exact_dilation : Scalar::one();
    if (k.is_zero()) fail(errc::bad_input, "dilation constant must be nonzero");
    h = k * h0;
  }
  if (h.is_affine()) return TorusClassification::affine;
  if (is_moebius_series(h)) return TorusClassification::projective_not_affine;
  return TorusClassification::not_projective;
}

bool relatively_hurwitz_affine(TauClass, const Scalar& c) { return c.is_zero(); }

bool relatively_hurwitz_projective(TauClass tau, const Scalar& c) {
  if (tau == TauClass::generic) return true;
  return c.is_zero();
}

}  // namespace projaut
