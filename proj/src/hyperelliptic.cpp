#include "projaut/hyperelliptic.hpp"

#include <numeric>
#include <sstream>

namespace projaut {

HyperellipticModel HyperellipticModel::plain(int g) {
  if (g < 2) fail(errc::bad_input, "hyperelliptic models need genus >= 2");
  return HyperellipticModel{g, 0};
}

HyperellipticModel HyperellipticModel::rotation_family(int g) {
  if (g < 2) fail(errc::bad_input, "hyperelliptic models need genus >= 2");
  return HyperellipticModel{g, 2L * g + 2};
}

std::string QuadBasisElement::str() const {
  std::ostringstream os;
  os << "x^" << x_exp << " (dx)^2 / y^" << y_pow;
  return os.str();
}

std::vector<QuadBasisElement> quad_basis(const HyperellipticModel& model) {
  std::vector<QuadBasisElement> out;
  for (int i = 0; i <= 2 * model.genus - 2; ++i) out.push_back({i, 2});
  for (int j = 0; j <= model.genus - 3; ++j) out.push_back({j, 1});
  return out;
}

OrderProfile differential_order_profile(const HyperellipticModel& model,
                                        const QuadBasisElement& q) {
  long g = model.genus;
  long i = q.x_exp;
  OrderProfile p{};
  // x = 0 is not a branch point (p(0) = 1): two sheets, x is a local
  // coordinate, y is a unit; x^i (dx)^2 / y^e has order i at each.
  p.at_zero = i;
  // At a simple branch point x = r != 0: local coordinate t with x - r = t^2
  // and y = t * unit, so (dx)^2 = 4 t^2 dt^2 contributes 2 and y^e eats e.
  p.at_branch = 2 - q.y_pow;
  // deg p = 2g + 2 is even, so x = infinity carries two points with local
  // coordinate s = 1/x there; y has a pole of order g + 1 at each and
  // (dx)^2 = s^{-4} ds^2.
  p.at_infinity = -i - 4 + q.y_pow * (g + 1);
  p.total_degree = 2 * p.at_zero + (2 * g + 2) * p.at_branch + 2 * p.at_infinity;
  p.holomorphic = p.at_zero >= 0 && p.at_branch >= 0 && p.at_infinity >= 0;
  return p;
}

bool certify_quad_basis(const HyperellipticModel& model) {
  std::vector<QuadBasisElement> basis = quad_basis(model);
  if (static_cast<int>(basis.size()) != model.dimension()) return false;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b)
      if (basis[a].x_exp == basis[b].x_exp && basis[a].y_pow == basis[b].y_pow)
        return false;  // repeated monomials would not be a basis
  long expected_degree = 4L * model.genus - 4;  // deg K^2
  for (const QuadBasisElement& q : basis) {
    OrderProfile p = differential_order_profile(model, q);
    if (!p.holomorphic || p.total_degree != expected_degree) return false;
  }
  return true;
}

namespace {

long shared_modulus(const HyperellipticModel& model) {
  return model.rotation_order > 0 ? model.rotation_order : 2;
}

}  // namespace

MonomialAction pullback_of_involution(const HyperellipticModel& model) {
  MonomialAction act;
  act.label = "J";
  act.modulus = shared_modulus(model);
  for (const QuadBasisElement& q : quad_basis(model)) {
    act.exponents.push_back(0);
    act.signs.push_back(q.y_pow == 2 ? +1 : -1);
  }
  return act;
}

long rotation_character_exponent(long m, long k, long x_exp) {
  if (m < 1) fail(errc::bad_input, "rotation order must be positive");
  long e = (k % m) * ((x_exp + 2) % m) % m;
  return ((e % m) + m) % m;
}

MonomialAction pullback_of_rotation(const HyperellipticModel& model, long k) {
  if (model.rotation_order <= 0)
    fail(errc::no_rotation_order, "model carries no rotation symmetry");
  long m = model.rotation_order;
  MonomialAction act;
  act.label = "R" + std::to_string(((k % m) + m) % m);
  act.modulus = m;
  for (const QuadBasisElement& q : quad_basis(model)) {
    act.exponents.push_back(rotation_character_exponent(m, k, q.x_exp));
    act.signs.push_back(+1);
  }
  return act;
}

int invariant_dimension(const HyperellipticModel& model,
                        const std::vector<MonomialAction>& generators) {
  int d = model.dimension();
  for (const MonomialAction& g : generators)
    if (g.dimension() != d)
      fail(errc::dimension_mismatch, "generator dimension does not match the model");
  int count = 0;
  for (int j = 0; j < d; ++j) {
    bool fixed = true;
    for (const MonomialAction& g : generators)
      if (!g.entry_trivial(j)) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

namespace {

bool entries_embed_in_exact_rings(const std::vector<MonomialAction>& generators) {
  for (const MonomialAction& g : generators)
    for (size_t j = 0; j < g.exponents.size(); ++j) {
      long e = g.exponents[j] % g.modulus;
      long order = e == 0 ? 1 : g.modulus / std::gcd(e, g.modulus);
      if (g.signs[j] < 0) order = std::lcm(order, 2L);
      if (order != 1 && order != 2 && order != 3 && order != 4 && order != 6) return false;
    }
  return true;
}

ActionGroup to_matrix_group(const HyperellipticModel& model,
                            const std::vector<MonomialAction>& generators) {
  std::vector<AffineAutAction> gens;
  int d = model.dimension();
  for (const MonomialAction& g : generators) {
    AffineAutAction a;
    a.label = g.label;
    a.pullback = ScalarMatrix(d, d);
    for (int j = 0; j < d; ++j) {
      Scalar entry = Scalar::root_of_unity(g.exponents[static_cast<size_t>(j)], g.modulus);
      if (g.signs[static_cast<size_t>(j)] < 0) entry = -entry;
      a.pullback.at(j, j) = entry;
    }
    a.translation.assign(static_cast<size_t>(d), Scalar::zero());
    gens.push_back(std::move(a));
  }
  return ActionGroup::with_matrices(model.genus, BaseStructure::fuchsian, std::move(gens));
}

bool only_signs(const std::vector<MonomialAction>& generators) {
  for (const MonomialAction& g : generators)
    for (size_t j = 0; j < g.exponents.size(); ++j)
      if (g.exponents[j] % g.modulus != 0) return false;
  return true;
}

}  // namespace

ActionGroup export_action(const HyperellipticModel& model,
                          const std::vector<MonomialAction>& generators) {
  // Sign-only actions become plain rational matrices; anything with a
  // genuine root of unity stays combinatorial, even when it would embed in
  // Q(i) or Q(w) (the forced-matrix export below covers those).
  if (only_signs(generators)) return to_matrix_group(model, generators);
  return ActionGroup::with_monomials(model.genus, BaseStructure::fuchsian, generators);
}

ActionGroup export_action_matrix(const HyperellipticModel& model,
                                 const std::vector<MonomialAction>& generators) {
  if (!entries_embed_in_exact_rings(generators))
    fail(errc::unsupported_ring,
         "generator entries leave the supported exact rings; use export_action");
  return to_matrix_group(model, generators);
}

std::vector<MonomialAction> parse_generators(const HyperellipticModel& model,
                                             const std::string& spec) {
  std::vector<MonomialAction> out;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token == "J" || token == "j") {
      out.push_back(pullback_of_involution(model));
    } else if ((token[0] == 'R' || token[0] == 'r') && token.size() > 1) {
      out.push_back(pullback_of_rotation(model, std::stol(token.substr(1))));
    } else if (token == "R" || token == "r") {
      out.push_back(pullback_of_rotation(model, 1));
    } else if (!token.empty()) {
      fail(errc::bad_input, "unknown generator '" + token + "' (expected J, R or Rk)");
    }
  }
  return out;
}

OrbifoldSignature belyi_signature(const HyperellipticModel& model) {
  if (model.rotation_order <= 0)
    fail(errc::no_rotation_order, "quotient data is recorded for the rotation family only");
  long m = model.rotation_order;
  return OrbifoldSignature{2 * m, 0, {2, m, m}};
}

}  // namespace projaut
