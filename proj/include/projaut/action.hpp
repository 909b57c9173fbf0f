#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projaut/linalg.hpp"
#include "projaut/scalar.hpp"

namespace projaut {

// Coordinates of a quadratic differential relative to a fixed base
// structure; dimension 3g - 3 for genus g >= 2. The zero vector is the
// base structure itself.
using QuadCoords = std::vector<Scalar>;

// One automorphism acting on quadratic-differential coordinates as
// q -> P q + t: linear pullback part P plus a translation recording the
// Schwarzian of the automorphism against the base structure. For a
// Fuchsian base the translation vanishes and the action is linear.
struct AffineAutAction {
  std::string label;
  ScalarMatrix pullback;
  QuadCoords translation;

  int dimension() const { return pullback.cols; }
};

// Diagonal action whose entries are sign * zeta_m^exponent. Exponent
// arithmetic stays in integers mod m, so rotation orders whose roots of
// unity fall outside the exact scalar rings are still handled exactly.
struct MonomialAction {
  std::string label;
  long modulus = 1;
  std::vector<long> exponents;
  std::vector<int> signs;

  int dimension() const { return static_cast<int>(exponents.size()); }
  bool entry_trivial(int j) const {
    return signs[static_cast<size_t>(j)] > 0 &&
           exponents[static_cast<size_t>(j)] % modulus == 0;
  }
  // Entrywise product (the actions commute; both are diagonal).
  MonomialAction composed_with(const MonomialAction& other) const;
};

enum class BaseStructure { fuchsian, other };

const char* base_structure_name(BaseStructure b);

// Automorphism group given by generators; the fixed locus of the
// generators equals that of the generated group, so no group completion
// is ever performed. Exactly one generator family is populated.
class ActionGroup {
public:
  static ActionGroup with_matrices(int genus, BaseStructure base,
                                   std::vector<AffineAutAction> gens);
  static ActionGroup with_monomials(int genus, BaseStructure base,
                                    std::vector<MonomialAction> gens);

  int genus() const { return genus_; }
  int dimension() const { return 3 * genus_ - 3; }
  BaseStructure base() const { return base_; }
  bool monomial() const { return !monomial_gens_.empty(); }
  const char* pathway() const { return monomial() ? "monomial" : "matrix"; }

  const std::vector<AffineAutAction>& matrix_generators() const { return matrix_gens_; }
  const std::vector<MonomialAction>& monomial_generators() const { return monomial_gens_; }

private:
  ActionGroup(int genus, BaseStructure base) : genus_(genus), base_(base) {}
  int genus_;
  BaseStructure base_;
  std::vector<AffineAutAction> matrix_gens_;
  std::vector<MonomialAction> monomial_gens_;
};

// Exact affine solution set of { P_i q + t_i = q  for all generators }.
// An inconsistent system is a legal outcome (empty = true), possible only
// for non-Fuchsian base data; with a Fuchsian base 0 is always fixed.
struct FixedLocus {
  bool empty = false;
  int dimension = 0;
  QuadCoords basepoint;
  std::vector<QuadCoords> directions;
  std::string pathway;
};

QuadCoords apply_action(const AffineAutAction& a, const QuadCoords& q);
bool is_projective_for(const AffineAutAction& a, const QuadCoords& q);

FixedLocus fixed_locus(const ActionGroup& group);

// Same computation as fixed_locus; each fixed point is a projective
// structure on which every generator acts projectively, i.e. a relatively
// Hurwitz structure when the generators span the full automorphism action
// (the caller's responsibility, recorded in the pathway metadata).
FixedLocus relatively_hurwitz_set(const ActionGroup& group);

}  // namespace projaut
