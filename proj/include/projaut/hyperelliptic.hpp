#pragma once

#include <string>
#include <vector>

#include "projaut/action.hpp"
#include "projaut/orbifold.hpp"

namespace projaut {

// Hyperelliptic curve y^2 = p(x) with deg p = 2g + 2 simple nonzero roots.
// The rotation family y^2 = 1 - x^m (m = 2g + 2) additionally carries the
// order-m symmetry (x, y) -> (lambda x, y).
struct HyperellipticModel {
  int genus = 2;
  long rotation_order = 0;  // 0: no rotation symmetry assumed

  static HyperellipticModel plain(int g);
  static HyperellipticModel rotation_family(int g);  // y^2 = 1 - x^(2g+2)

  int branch_points() const { return 2 * genus + 2; }
  int dimension() const { return 3 * genus - 3; }
};

// Monomial quadratic differential x^{x_exp} (dx)^2 / y^{y_pow}.
struct QuadBasisElement {
  int x_exp;
  int y_pow;  // 2 for the even family B1, 1 for the odd family B2

  std::string str() const;
};

// Ordered basis of the holomorphic quadratic differentials: first
// B1 = { x^i (dx)^2 / y^2 : 0 <= i <= 2g-2 }, then
// B2 = { x^j (dx)^2 / y   : 0 <= j <= g-3 }; (2g-1) + (g-2) = 3g-3 elements.
std::vector<QuadBasisElement> quad_basis(const HyperellipticModel& model);

// Local vanishing orders of a basis monomial at the distinguished points of
// the curve, from explicit local coordinates. Holomorphy of the basis is
// certified by all orders being >= 0 and the total degree summing to 4g-4.
struct OrderProfile {
  long at_zero;        // each of the two points with x = 0
  long at_branch;      // each simple branch point of the double cover
  long at_infinity;    // each of the two points over x = infinity
  long total_degree;   // sum over all points of the curve
  bool holomorphic;
};
OrderProfile differential_order_profile(const HyperellipticModel& model,
                                        const QuadBasisElement& element);
bool certify_quad_basis(const HyperellipticModel& model);

// Pullback of the hyperelliptic involution (x, y) -> (x, -y): +1 on B1
// (even in y), -1 on B2.
MonomialAction pullback_of_involution(const HyperellipticModel& model);

// Pullback of (x, y) -> (lambda^k x, y) for lambda a primitive m-th root of
// unity: the basis element x^i (dx)^2 / y^e is multiplied by
// lambda^{k (i + 2)}. Requires the model to carry a rotation order.
MonomialAction pullback_of_rotation(const HyperellipticModel& model, long k);

// Exponent of the multiplier picked up by x^{x_exp} (dx)^2 under x -> lambda^k x.
long rotation_character_exponent(long m, long k, long x_exp);

// Number of basis elements fixed by every generator: the actions in scope
// are diagonal, so invariance is decided per element by its characters.
int invariant_dimension(const HyperellipticModel& model,
                        const std::vector<MonomialAction>& generators);

// Bridge to the affine-action machinery with the Fuchsian base (so the
// translation part vanishes). Entries of order <= 2 embed in Q and produce
// explicit matrices; genuine roots of unity keep the combinatorial form.
ActionGroup export_action(const HyperellipticModel& model,
                          const std::vector<MonomialAction>& generators);

// Forces explicit matrices over the exact rings; unsupported_ring when an
// entry's multiplicative order is outside {1, 2, 3, 4, 6}.
ActionGroup export_action_matrix(const HyperellipticModel& model,
                                 const std::vector<MonomialAction>& generators);

// Parses generator lists like "J", "R1", "J,R2" for the model's symmetries.
std::vector<MonomialAction> parse_generators(const HyperellipticModel& model,
                                             const std::string& spec);

// Quotient data of the degree-2m map (x, y) -> x^m on y^2 = 1 - x^m:
// genus 0 with branch values 0, 1, infinity of orders m, 2, m.
OrbifoldSignature belyi_signature(const HyperellipticModel& model);

}  // namespace projaut
