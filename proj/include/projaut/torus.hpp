#pragma once

#include <string>
#include <vector>

#include "projaut/scalar.hpp"
#include "projaut/series.hpp"

namespace projaut {

// Isomorphism class of the genus-1 surface C / span{1, tau}, as far as its
// reduced automorphism group is concerned: a generic lattice admits only
// z -> -z, the square lattice multiplication by i, the hexagonal lattice a
// primitive sixth root of unity. Boundary lattices are not modeled.
enum class TauClass { generic, square, hexagonal };

const char* tau_class_name(TauClass t);
TauClass parse_tau_class(const std::string& name);

// Torus automorphism z -> a z + b with the multiplier a one of the roots of
// unity admissible for the lattice class.
struct TorusAutomorphism {
  std::string label;
  Scalar multiplier;   // a
  Scalar translation;  // b; the classification depends on it only via c = 0

  static TorusAutomorphism translation_by(const Scalar& p);
  static TorusAutomorphism involution();                       // z -> -z
  static TorusAutomorphism rotation(TauClass tau, long k = 1); // generator^k
};

// Admissible multiplier values: {1, -1}, the powers of i, or the powers of
// the primitive sixth root, respectively.
std::vector<Scalar> multiplier_classes(TauClass tau);

// Affine structures on the torus are deformations of the Euclidean
// uniformization with developing map z -> e^{cz}; c = 0 is the Euclidean
// structure itself.
enum class TorusClassification { affine, projective_not_affine, not_projective };

const char* classification_name(TorusClassification c);

// Closed-form classification of how the automorphism acts on the structure
// with parameter c: for c = 0 every automorphism is a Euclidean isometry;
// otherwise a translation acts as a dilation (affine), the involution as an
// inversion (projective, not affine), and any other multiplier as a
// fractional power (not projective).
TorusClassification classify_by_formula(const Scalar& c, const TorusAutomorphism& aut,
                                        TauClass tau);

// Independent pathway through power series: conjugating z -> az + b by the
// developing map gives u -> K u^a near u = 1 with K = e^{cb}. The series
// exp(a log(1+w)) is built from reversion and composition alone, the
// optional exact dilation K scales it, and the affine/Moebius tests run on
// the result. Must agree with classify_by_formula.
TorusClassification classify_by_series(const Scalar& c, const TorusAutomorphism& aut,
                                       TauClass tau, int order = kDefaultLawOrder,
                                       const Scalar* exact_dilation = nullptr);

// The Euclidean uniformization is the unique structure on which the full
// automorphism group acts affinely, for every lattice class.
bool relatively_hurwitz_affine(TauClass tau, const Scalar& c);

// For the square and hexagonal lattices the Euclidean uniformization is
// also the unique structure on which the group acts projectively; a generic
// lattice has only translations and the involution, and those act
// projectively on every structure.
bool relatively_hurwitz_projective(TauClass tau, const Scalar& c);

}  // namespace projaut
