#include "projaut/action.hpp"

#include <algorithm>

namespace projaut {

const char* base_structure_name(BaseStructure b) {
  return b == BaseStructure::fuchsian ? "fuchsian" : "other";
}

MonomialAction MonomialAction::composed_with(const MonomialAction& other) const {
  if (modulus != other.modulus || dimension() != other.dimension())
    fail(errc::dimension_mismatch, "monomial actions do not match");
  MonomialAction out = *this;
  out.label = label + "*" + other.label;
  for (size_t j = 0; j < exponents.size(); ++j) {
    out.exponents[j] = (exponents[j] + other.exponents[j]) % modulus;
    out.signs[j] = signs[j] * other.signs[j];
  }
  return out;
}

ActionGroup ActionGroup::with_matrices(int genus, BaseStructure base,
                                       std::vector<AffineAutAction> gens) {
  if (genus < 2) fail(errc::bad_input, "action groups need genus >= 2");
  ActionGroup g(genus, base);
  int d = g.dimension();
  for (const AffineAutAction& a : gens) {
    if (a.pullback.rows != d || a.pullback.cols != d ||
        static_cast<int>(a.translation.size()) != d)
      fail(errc::dimension_mismatch,
           "generator '" + a.label + "' does not have dimension 3g-3 = " + std::to_string(d));
    if (matrix_rank(a.pullback) != d)
      fail(errc::not_invertible, "pullback of generator '" + a.label + "' is singular");
    if (base == BaseStructure::fuchsian)
      for (const Scalar& t : a.translation)
        if (!t.is_zero())
          fail(errc::fuchsian_translation_nonzero,
               "Fuchsian base forces a linear action, generator '" + a.label + "'");
  }
  g.matrix_gens_ = std::move(gens);
  return g;
}

ActionGroup ActionGroup::with_monomials(int genus, BaseStructure base,
                                        std::vector<MonomialAction> gens) {
  if (genus < 2) fail(errc::bad_input, "action groups need genus >= 2");
  ActionGroup g(genus, base);
  int d = g.dimension();
  for (MonomialAction& a : gens) {
    if (a.dimension() != d || a.signs.size() != a.exponents.size())
      fail(errc::dimension_mismatch,
           "generator '" + a.label + "' does not have dimension 3g-3 = " + std::to_string(d));
    if (a.modulus < 1) fail(errc::bad_input, "monomial modulus must be positive");
    if (a.modulus != gens.front().modulus)
      fail(errc::bad_input, "monomial generators must share one modulus");
    for (long& e : a.exponents) e = ((e % a.modulus) + a.modulus) % a.modulus;
    for (int s : a.signs)
      if (s != 1 && s != -1) fail(errc::bad_input, "signs must be +1 or -1");
  }
  g.monomial_gens_ = std::move(gens);
  return g;
}

QuadCoords apply_action(const AffineAutAction& a, const QuadCoords& q) {
  if (static_cast<int>(q.size()) != a.dimension())
    fail(errc::dimension_mismatch, "coordinate dimension mismatch");
  QuadCoords out = a.pullback.apply(q);
  for (size_t j = 0; j < out.size(); ++j) out[j] += a.translation[j];
  return out;
}

bool is_projective_for(const AffineAutAction& a, const QuadCoords& q) {
  QuadCoords image = apply_action(a, q);
  for (size_t j = 0; j < q.size(); ++j)
    if (image[j] != q[j]) return false;
  return true;
}

namespace {

FixedLocus fixed_locus_of_matrices(const ActionGroup& group) {
  int d = group.dimension();
  const auto& gens = group.matrix_generators();
  ScalarMatrix stacked(static_cast<int>(gens.size()) * d, d);
  std::vector<Scalar> rhs(static_cast<size_t>(stacked.rows));
  for (size_t i = 0; i < gens.size(); ++i) {
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        Scalar v = gens[i].pullback.at(r, c);
        if (r == c) v -= Scalar::one();
        stacked.at(static_cast<int>(i) * d + r, c) = v;
      }
      rhs[i * static_cast<size_t>(d) + static_cast<size_t>(r)] = -gens[i].translation[static_cast<size_t>(r)];
    }
  }
  AffineSolution sol = solve_affine(stacked, rhs);
  FixedLocus out;
  out.pathway = "matrix";
  if (!sol.consistent) {
    out.empty = true;
    return out;
  }
  out.dimension = static_cast<int>(sol.kernel.size());
  out.basepoint = std::move(sol.particular);
  out.directions = std::move(sol.kernel);
  return out;
}

// Fixed locus of a diagonal root-of-unity action, computed without ever
// leaving rational arithmetic: each complex coordinate is modeled as the
// field Q(zeta_m) over Q, where multiplication by zeta_m is the companion
// matrix of the m-th cyclotomic polynomial. The rational kernel dimension
// of the blown-up system is phi(m) times the complex fixed dimension.
FixedLocus fixed_locus_of_monomials(const ActionGroup& group) {
  int d = group.dimension();
  const auto& gens = group.monomial_generators();
  long m = gens.empty() ? 1 : gens.front().modulus;
  ScalarMatrix comp = cyclotomic_companion(m);
  int phi = comp.rows;

  // Powers of the companion matrix, cached.
  std::vector<ScalarMatrix> power(static_cast<size_t>(m));
  power[0] = ScalarMatrix::identity(phi);
  for (long k = 1; k < m; ++k) power[static_cast<size_t>(k)] = power[static_cast<size_t>(k - 1)] * comp;

  ScalarMatrix stacked(static_cast<int>(gens.size()) * d * phi, d * phi);
  for (size_t i = 0; i < gens.size(); ++i) {
    const MonomialAction& g = gens[i];
    for (int j = 0; j < d; ++j) {
      const ScalarMatrix& block = power[static_cast<size_t>(g.exponents[static_cast<size_t>(j)] % m)];
      Scalar sign(static_cast<long>(g.signs[static_cast<size_t>(j)]));
      for (int r = 0; r < phi; ++r)
        for (int c = 0; c < phi; ++c) {
          Scalar v = sign * block.at(r, c);
          if (r == c) v -= Scalar::one();
          stacked.at((static_cast<int>(i) * d + j) * phi + r, j * phi + c) = v;
        }
    }
  }
  AffineSolution sol = solve_affine(stacked, std::vector<Scalar>(static_cast<size_t>(stacked.rows)));

  FixedLocus out;
  out.pathway = "monomial";
  int blown_dim = static_cast<int>(sol.kernel.size());
  if (blown_dim % phi != 0)
    fail(errc::bad_input, "blown-up kernel dimension is not a multiple of phi(m)");
  out.dimension = blown_dim / phi;
  out.basepoint.assign(static_cast<size_t>(d), Scalar::zero());

  // A coordinate is free exactly when some kernel vector meets its block.
  std::vector<bool> fixed_coord(static_cast<size_t>(d), false);
  for (const auto& vec : sol.kernel)
    for (int j = 0; j < d; ++j)
      for (int r = 0; r < phi; ++r)
        if (!vec[static_cast<size_t>(j * phi + r)].is_zero()) fixed_coord[static_cast<size_t>(j)] = true;
  int count = 0;
  for (int j = 0; j < d; ++j) {
    if (!fixed_coord[static_cast<size_t>(j)]) continue;
    ++count;
    QuadCoords dir(static_cast<size_t>(d), Scalar::zero());
    dir[static_cast<size_t>(j)] = Scalar::one();
    out.directions.push_back(std::move(dir));
  }
  if (count != out.dimension)
    fail(errc::bad_input, "monomial fixed locus is not spanned by coordinate axes");
  return out;
}

}  // namespace

FixedLocus fixed_locus(const ActionGroup& group) {
  if (group.monomial()) return fixed_locus_of_monomials(group);
  if (group.matrix_generators().empty()) {
    // No constraints: the whole coordinate space is fixed.
    FixedLocus out;
    out.pathway = group.pathway();
    out.dimension = group.dimension();
    out.basepoint.assign(static_cast<size_t>(group.dimension()), Scalar::zero());
    for (int j = 0; j < group.dimension(); ++j) {
      QuadCoords dir(static_cast<size_t>(group.dimension()), Scalar::zero());
      dir[static_cast<size_t>(j)] = Scalar::one();
      out.directions.push_back(std::move(dir));
    }
    return out;
  }
  return fixed_locus_of_matrices(group);
}

FixedLocus relatively_hurwitz_set(const ActionGroup& group) { return fixed_locus(group); }

}  // namespace projaut
