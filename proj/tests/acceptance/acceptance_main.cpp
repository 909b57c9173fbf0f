// Acceptance suite: one line per criterion, exit status 0 only if every
// criterion passes at its stated tolerance (all checks here are exact).
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "projaut/hyperelliptic.hpp"
#include "projaut/moebius.hpp"
#include "projaut/orbifold.hpp"
#include "projaut/origami.hpp"
#include "projaut/series.hpp"
#include "projaut/torus.hpp"

using namespace projaut;

namespace {

int g_failures = 0;
int g_index = 0;

void report(bool pass, const std::string& what, double ms) {
  ++g_index;
  std::printf("[%d/8] %s %s (%.0f ms)\n", g_index, pass ? "PASS" : "FAIL", what.c_str(), ms);
  if (!pass) ++g_failures;
}

std::string g_note;

void criterion(const std::string& what, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  g_note.clear();
  try {
    pass = body();
  } catch (const std::exception& e) {
    g_note = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  std::string line = what;
  if (!g_note.empty()) line += " [" + g_note + "]";
  report(pass, line, ms);
}

mpq_class small_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (;;) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

Series random_series(std::mt19937_64& rng, int order, bool zero_constant) {
  std::vector<Scalar> cs;
  cs.push_back(zero_constant ? Scalar::zero() : Scalar(small_rational(rng, false)));
  cs.push_back(Scalar(small_rational(rng, true)));
  for (int k = 2; k <= order; ++k) cs.push_back(Scalar(small_rational(rng, false)));
  return Series(std::move(cs));
}

// 1. Cocycle law on 200 random exact pairs at order 16, under 30 s.
bool cocycle_suite() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240816);
  for (int t = 0; t < 200; ++t) {
    Series f = random_series(rng, 16, false);
    Series g = random_series(rng, 16, true);
    Series r = cocycle_residual(f, g);
    if (!r.is_zero() || r.order() != 13) return false;
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return secs < 30.0;
}

// 2. Schwarzian kernel on random gaussian Moebius maps, plus the exact
// closed forms of the three standard non-examples.
bool moebius_kernel_suite() {
  std::mt19937_64 rng(1729);
  int done = 0;
  while (done < 100) {
    Scalar a = Scalar::gaussian(small_rational(rng, false), small_rational(rng, false));
    Scalar b = Scalar::gaussian(small_rational(rng, false), small_rational(rng, false));
    Scalar c = Scalar::gaussian(small_rational(rng, false), small_rational(rng, false));
    Scalar d = Scalar::gaussian(small_rational(rng, false), small_rational(rng, false));
    if ((a * d - b * c).is_zero()) continue;
    MobiusMap f(a, b, c, d);
    int centers = 0;
    for (long x = 0; centers < 3; ++x) {
      Scalar center = Scalar::gaussian(mpq_class(x), small_rational(rng, false));
      if ((f.c() * center + f.d()).is_zero()) continue;
      ++centers;
      if (!schwarzian(f.taylor(center, 16)).is_zero()) return false;
    }
    ++done;
  }

  // exp: S = -1/2 exactly
  Series s_exp = schwarzian(Series::exponential(16));
  if (s_exp.coeff(0) != Scalar::rational(-1, 2)) return false;
  for (int k = 1; k <= s_exp.order(); ++k)
    if (!s_exp.coeff(k).is_zero()) return false;

  // z + z^2: S = -6 / (1 + 2w)^2 = sum -6 (k+1) (-2)^k w^k
  std::vector<Scalar> zz2{Scalar(0), Scalar(1), Scalar(1)};
  Series s_poly = schwarzian(Series(zz2).truncated(16));
  mpq_class pow = 1;
  for (int k = 0; k <= s_poly.order(); ++k) {
    mpq_class expected = mpq_class(-6) * (k + 1) * pow;
    if (s_poly.coeff(k) != Scalar(expected)) return false;
    pow *= -2;
  }

  // z / (1 - z)^2 = sum k z^k: S = -6 / (1 - z^2)^2 = sum -6 (k+1) z^{2k}
  std::vector<Scalar> koebe(17, Scalar::zero());
  for (long k = 1; k <= 16; ++k) koebe[static_cast<size_t>(k)] = Scalar(k);
  Series s_koebe = schwarzian(Series(koebe));
  for (int k = 0; k <= s_koebe.order(); ++k) {
    if (k % 2 == 1) {
      if (!s_koebe.coeff(k).is_zero()) return false;
    } else if (s_koebe.coeff(k) != Scalar(mpq_class(-6) * (k / 2 + 1))) {
      return false;
    }
  }
  return true;
}

// 3. Involution-invariant dimension three ways: character count, the
// closed formula, and the fixed locus of the exported matrix action.
bool dimension_cross_check() {
  for (int g = 2; g <= 8; ++g) {
    HyperellipticModel model = HyperellipticModel::plain(g);
    std::vector<MonomialAction> gens{pullback_of_involution(model)};
    long brute = invariant_dimension(model, gens);
    long formula = invariant_quadratic_dimension(0, 2 * g + 2);
    long locus = fixed_locus(export_action(model, gens)).dimension;
    if (brute != 2 * g - 1 || formula != brute || locus != brute) return false;
  }
  return true;
}

// 4. The full rotation symmetry leaves no invariant differential; the
// quotient data is a three-point genus-0 signature.
bool very_large_uniqueness() {
  for (int g = 2; g <= 8; ++g) {
    HyperellipticModel model = HyperellipticModel::rotation_family(g);
    std::vector<MonomialAction> gens{pullback_of_involution(model),
                                     pullback_of_rotation(model, 1)};
    if (invariant_dimension(model, gens) != 0) return false;
    if (fixed_locus(export_action(model, gens)).dimension != 0) return false;
    OrbifoldSignature sig = belyi_signature(model);
    auto genus = riemann_hurwitz_genus(sig);
    if (!genus || *genus != g) return false;
    if (!is_very_large(sig.quotient_genus, static_cast<long>(sig.branch_orders.size())))
      return false;
  }
  return is_very_large(0, 3);
}

// 5. The 84 ceiling over all hyperbolic triples with c <= 200, attained
// only at (2,3,7); the classical genus values follow.
bool hurwitz_constant() {
  std::vector<TriangleSignature> all = enumerate_triangle_signatures(2, 200);
  if (all.empty()) return false;
  mpq_class best = automorphisms_per_genus(all.front());
  if (best != 84) return false;
  if (!(all.front() == TriangleSignature{2, 3, 7})) return false;
  if (automorphisms_per_genus(all[1]) >= 84) return false;
  for (const TriangleSignature& sig : all)
    if (automorphisms_per_genus(sig) > 84) return false;
  return *riemann_hurwitz_genus({168, 0, {2, 3, 7}}) == 3 &&
         *riemann_hurwitz_genus({504, 0, {2, 3, 7}}) == 7;
}

// 6. Genus-1 grid: the two classification pathways agree, and the
// relatively Hurwitz predicates match what the classifications say.
bool torus_grid() {
  std::vector<Scalar> params{Scalar::zero(), Scalar::one(), Scalar::gaussian(1, 1)};
  for (TauClass tau : {TauClass::generic, TauClass::square, TauClass::hexagonal}) {
    long order = tau == TauClass::generic ? 2 : (tau == TauClass::square ? 4 : 6);
    for (const Scalar& c : params) {
      bool all_affine = true, all_projective = true;
      std::vector<TorusAutomorphism> auts;
      auts.push_back(TorusAutomorphism::translation_by(Scalar::rational(1, 2)));
      auts.push_back(TorusAutomorphism::involution());
      for (long k = 1; k < order; ++k) auts.push_back(TorusAutomorphism::rotation(tau, k));
      for (const TorusAutomorphism& aut : auts) {
        TorusClassification f = classify_by_formula(c, aut, tau);
        TorusClassification s = classify_by_series(c, aut, tau, 12);
        if (f != s) return false;
        all_affine = all_affine && f == TorusClassification::affine;
        all_projective = all_projective && f != TorusClassification::not_projective;
      }
      if (all_affine != relatively_hurwitz_affine(tau, c)) return false;
      if (all_projective != relatively_hurwitz_projective(tau, c)) return false;
    }
  }
  // uniqueness statements across the parameter set
  for (TauClass tau : {TauClass::generic, TauClass::square, TauClass::hexagonal}) {
    if (!relatively_hurwitz_affine(tau, Scalar::zero())) return false;
    if (relatively_hurwitz_affine(tau, Scalar::one())) return false;
  }
  return relatively_hurwitz_projective(TauClass::generic, Scalar::one()) &&
         !relatively_hurwitz_projective(TauClass::square, Scalar::one()) &&
         !relatively_hurwitz_projective(TauClass::hexagonal, Scalar::gaussian(1, 1));
}

// 7. Exhaustive origami census through 8 squares, as stated: the
// translation bound with equality exactly on normal origamis, the
// quaternion example, and the genus divisibility of normal origamis;
// under 5 minutes. The equality-iff-normality clause is expected to fail:
// tightness also needs branching order 2, and the regular S3 origami is a
// normal counterexample at n = 6 (see the bound-report cross-asserts for
// the corrected characterization, which does hold exhaustively).
bool origami_theorem() {
  auto start = std::chrono::steady_clock::now();
  bool quaternion_found = false;
  long checked = 0, iff_failures = 0;
  std::string witness;
  for (const Origami& o : enumerate_origamis(8)) {
    int g = genus(o);
    if (g < 2) continue;
    ++checked;
    long trans = static_cast<long>(translation_group(o).size());
    long bound = 4L * (g - 1);
    bool normal = is_normal(o);
    if (trans > bound) {
      g_note = "bound violated at " + o.right.cycle_string() + " / " + o.up.cycle_string();
      return false;
    }
    if ((trans == bound) != normal) {
      if (iff_failures == 0)
        witness = o.right.cycle_string() + " / " + o.up.cycle_string() + " is normal with " +
                  std::to_string(trans) + " < " + std::to_string(bound) + " translations";
      ++iff_failures;
    }
    if (normal && !normal_origami_genus_condition(g)) {
      g_note = "divisibility failed at " + o.right.cycle_string();
      return false;
    }
    if (o.squares() == 8 && g == 3 && normal && trans == 8) quaternion_found = true;
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (iff_failures > 0) {
    g_note = "equality-iff-normal fails: " + std::to_string(iff_failures) +
             " normal origamis below the bound, e.g. " + witness +
             "; equality holds exactly on normal origamis with branching order 2";
    return false;
  }
  return quaternion_found && checked > 0 && secs < 300.0;
}

// 8. Pushforward order table: holomorphy exactly on s >= 2(m-1).
bool quotient_order_table() {
  for (long m = 1; m <= 6; ++m)
    for (long s = 0; s <= 12; ++s) {
      QuotientOrder q = quotient_differential_order(s, m);
      mpq_class expected(s - 2 * (m - 1), m);
      expected.canonicalize();
      if (q.order != expected) return false;
      if (q.holomorphic != (s >= 2 * (m - 1))) return false;
      if (q.holomorphic != (q.order >= 0)) return false;
    }
  return true;
}

}  // namespace

int main() {
  criterion("schwarzian cocycle suite: 200 random exact pairs, order 16, residuals zero",
            cocycle_suite);
  criterion("moebius kernel suite: 100 gaussian maps x 3 centers at order 16, plus exact "
            "closed forms for exp, z+z^2, z/(1-z)^2",
            moebius_kernel_suite);
  criterion("dimension cross-check g=2..8: character count = 3g0-3+n formula = fixed locus",
            dimension_cross_check);
  criterion("uniqueness for very large groups: full rotation symmetry fixes only 0, g=2..8",
            very_large_uniqueness);
  criterion("hurwitz constant: max ratio over c<=200 is 84, only at (2,3,7); genus 3 and 7 "
            "at orders 168 and 504",
            hurwitz_constant);
  criterion("genus-1 grid: formula and series pathways agree; euclidean uniformization "
            "uniqueness statements",
            torus_grid);
  criterion("origami census n<=8: translation bound 4(g-1) tight exactly on normal "
            "origamis; quaternion origami at (g,|Trans|)=(3,8)",
            origami_theorem);
  criterion("quotient-order formula: holomorphy boundary s = 2(m-1) for m=1..6, s=0..12",
            quotient_order_table);

  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
