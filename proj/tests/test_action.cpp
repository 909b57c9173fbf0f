#include <doctest.h>

#include "projaut/action.hpp"

using namespace projaut;

TEST_SUITE_BEGIN("action");

namespace {

ScalarMatrix diagonal(const std::vector<long>& entries) {
  ScalarMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (size_t k = 0; k < entries.size(); ++k)
    m.at(static_cast<int>(k), static_cast<int>(k)) = Scalar(entries[k]);
  return m;
}

AffineAutAction make_action(std::string label, ScalarMatrix p, QuadCoords t) {
  AffineAutAction a;
  a.label = std::move(label);
  a.pullback = std::move(p);
  a.translation = std::move(t);
  return a;
}

QuadCoords zeros(int d) { return QuadCoords(static_cast<size_t>(d), Scalar::zero()); }

}  // namespace

TEST_CASE("affine application") {
  // identity automorphism fixes everything
  AffineAutAction id = make_action("id", ScalarMatrix::identity(3), zeros(3));
  QuadCoords q{Scalar(1), Scalar(2), Scalar(3)};
  CHECK(apply_action(id, q) == q);
  CHECK(is_projective_for(id, q));

  // P = diag(1,-1,1), t = (0,1,0) sends (1,1,1) to (1,0,1)
  AffineAutAction a =
      make_action("a", diagonal({1, -1, 1}), {Scalar::zero(), Scalar::one(), Scalar::zero()});
  QuadCoords ones{Scalar(1), Scalar(1), Scalar(1)};
  QuadCoords image = apply_action(a, ones);
  CHECK(image == QuadCoords{Scalar(1), Scalar(0), Scalar(1)});
  CHECK_FALSE(is_projective_for(a, ones));

  CHECK_THROWS_AS(apply_action(a, zeros(2)), Error);
}

TEST_CASE("translations move the origin off itself") {
  AffineAutAction shift =
      make_action("s", ScalarMatrix::identity(3), {Scalar::one(), Scalar::zero(), Scalar::zero()});
  CHECK_FALSE(is_projective_for(shift, zeros(3)));
}

TEST_CASE("fuchsian base forces linear generators") {
  AffineAutAction shift =
      make_action("s", ScalarMatrix::identity(3), {Scalar::one(), Scalar::zero(), Scalar::zero()});
  CHECK_THROWS_AS(ActionGroup::with_matrices(2, BaseStructure::fuchsian, {shift}), Error);
  CHECK_NOTHROW(ActionGroup::with_matrices(2, BaseStructure::other, {shift}));
}

TEST_CASE("singular pullbacks are rejected") {
  AffineAutAction bad = make_action("b", diagonal({1, 0, 1}), zeros(3));
  CHECK_THROWS_AS(ActionGroup::with_matrices(2, BaseStructure::fuchsian, {bad}), Error);
}

TEST_CASE("fixed locus with no generators is the whole space") {
  ActionGroup g = ActionGroup::with_matrices(3, BaseStructure::fuchsian, {});
  FixedLocus locus = fixed_locus(g);
  CHECK_FALSE(locus.empty);
  CHECK(locus.dimension == 6);
  CHECK(locus.directions.size() == 6);
  for (const Scalar& v : locus.basepoint) CHECK(v.is_zero());
}

TEST_CASE("fixed locus of a diagonal involution") {
  // genus 3, d = 6: diag(+1 x5, -1) has a 5-dimensional fixed space
  ActionGroup g = ActionGroup::with_matrices(
      3, BaseStructure::fuchsian, {make_action("J", diagonal({1, 1, 1, 1, 1, -1}), zeros(6))});
  FixedLocus locus = fixed_locus(g);
  CHECK(locus.dimension == 5);
  CHECK(locus.pathway == "matrix");
  // every reported direction really is fixed by every generator
  for (const QuadCoords& dir : locus.directions) {
    QuadCoords pt = dir;
    for (size_t k = 0; k < pt.size(); ++k) pt[k] += locus.basepoint[k];
    for (const AffineAutAction& gen : g.matrix_generators()) CHECK(is_projective_for(gen, pt));
  }
  // with a fuchsian base the origin is always fixed
  for (const AffineAutAction& gen : g.matrix_generators())
    CHECK(is_projective_for(gen, locus.basepoint));
}

TEST_CASE("fixed locus dimension is stable under redundant generators") {
  ScalarMatrix p = diagonal({1, -1, 1});
  ScalarMatrix p2 = p * p;  // identity
  ActionGroup small = ActionGroup::with_matrices(2, BaseStructure::fuchsian,
                                                 {make_action("g", p, zeros(3))});
  ActionGroup padded = ActionGroup::with_matrices(
      2, BaseStructure::fuchsian,
      {make_action("g", p, zeros(3)), make_action("gg", p2, zeros(3))});
  CHECK(fixed_locus(small).dimension == fixed_locus(padded).dimension);
}

TEST_CASE("affine fixed point with nonzero translation") {
  // q -> 2q + 1 on one coordinate fixes q = -1
  ScalarMatrix p = diagonal({2, 1, 1});
  AffineAutAction a = make_action("a", p, {Scalar::one(), Scalar::zero(), Scalar::zero()});
  ActionGroup g = ActionGroup::with_matrices(2, BaseStructure::other, {a});
  FixedLocus locus = fixed_locus(g);
  CHECK_FALSE(locus.empty);
  CHECK(locus.dimension == 2);
  CHECK(locus.basepoint[0] == Scalar(-1));
  CHECK(is_projective_for(a, locus.basepoint));
  // the whole reported locus re-substitutes: basepoint + each direction
  for (const QuadCoords& dir : locus.directions) {
    QuadCoords pt = locus.basepoint;
    for (size_t k = 0; k < pt.size(); ++k) pt[k] += dir[k];
    CHECK(is_projective_for(a, pt));
  }
}

TEST_CASE("inconsistent affine systems give the empty locus") {
  // q -> q + 1: no fixed point
  AffineAutAction shift =
      make_action("s", ScalarMatrix::identity(3), {Scalar::one(), Scalar::zero(), Scalar::zero()});
  ActionGroup g = ActionGroup::with_matrices(2, BaseStructure::other, {shift});
  FixedLocus locus = fixed_locus(g);
  CHECK(locus.empty);
}

TEST_CASE("monomial pathway agrees with the explicit matrix pathway") {
  // diag(zeta_6^e) type actions on 3 coordinates, checked both ways
  MonomialAction rot;
  rot.label = "r";
  rot.modulus = 6;
  rot.exponents = {0, 2, 3};
  rot.signs = {+1, +1, +1};
  ActionGroup mono = ActionGroup::with_monomials(2, BaseStructure::fuchsian, {rot});
  FixedLocus ml = fixed_locus(mono);
  CHECK(ml.pathway == "monomial");
  CHECK(ml.dimension == 1);
  REQUIRE(ml.directions.size() == 1);
  CHECK(ml.directions[0][0] == Scalar::one());

  ScalarMatrix p(3, 3);
  p.at(0, 0) = Scalar::one();
  p.at(1, 1) = Scalar::omega();                 // zeta_6^2
  p.at(2, 2) = Scalar(-1);                      // zeta_6^3
  ActionGroup mat = ActionGroup::with_matrices(2, BaseStructure::fuchsian,
                                               {make_action("r", p, zeros(3))});
  CHECK(fixed_locus(mat).dimension == ml.dimension);
}

TEST_CASE("monomial signs participate in the fixed condition") {
  MonomialAction a;
  a.label = "j";
  a.modulus = 2;
  a.exponents = {0, 0, 0};
  a.signs = {+1, +1, -1};
  ActionGroup g = ActionGroup::with_monomials(2, BaseStructure::fuchsian, {a});
  CHECK(fixed_locus(g).dimension == 2);

  // sign -1 with exponent m/2 cancels out: -zeta_2 = 1... for modulus 2 the
  // entry -zeta_2^1 = 1 is trivial again
  MonomialAction b = a;
  b.exponents = {0, 0, 1};
  CHECK(fixed_locus(ActionGroup::with_monomials(2, BaseStructure::fuchsian, {b})).dimension == 3);
}

TEST_CASE("fixed loci over the imaginary rings") {
  // real rotation block by 90 degrees: only the third axis is fixed
  ScalarMatrix rot(3, 3);
  rot.at(0, 1) = Scalar(-1);
  rot.at(1, 0) = Scalar::one();
  rot.at(2, 2) = Scalar::one();
  ActionGroup g1 = ActionGroup::with_matrices(2, BaseStructure::fuchsian,
                                              {make_action("rot", rot, zeros(3))});
  CHECK(fixed_locus(g1).dimension == 1);

  // gaussian diagonal diag(i, -i, 1)
  ScalarMatrix gd(3, 3);
  gd.at(0, 0) = Scalar::i();
  gd.at(1, 1) = -Scalar::i();
  gd.at(2, 2) = Scalar::one();
  ActionGroup g2 = ActionGroup::with_matrices(2, BaseStructure::fuchsian,
                                              {make_action("i", gd, zeros(3))});
  FixedLocus l2 = fixed_locus(g2);
  CHECK(l2.dimension == 1);
  for (const QuadCoords& dir : l2.directions)
    for (const AffineAutAction& gen : g2.matrix_generators())
      CHECK(is_projective_for(gen, dir));

  // eisenstein diagonal diag(w, w^2, 1) together with the rotation block
  ScalarMatrix ed(3, 3);
  ed.at(0, 0) = Scalar::omega();
  ed.at(1, 1) = Scalar::omega() * Scalar::omega();
  ed.at(2, 2) = Scalar::one();
  ActionGroup g3 = ActionGroup::with_matrices(
      2, BaseStructure::fuchsian,
      {make_action("w", ed, zeros(3)), make_action("rot", rot, zeros(3))});
  CHECK(fixed_locus(g3).dimension == 1);
}

TEST_CASE("relatively hurwitz set is the fixed locus") {
  ActionGroup g = ActionGroup::with_matrices(
      3, BaseStructure::fuchsian, {make_action("J", diagonal({1, 1, 1, 1, 1, -1}), zeros(6))});
  FixedLocus a = fixed_locus(g);
  FixedLocus b = relatively_hurwitz_set(g);
  CHECK(a.dimension == b.dimension);
  CHECK(a.basepoint == b.basepoint);
}

TEST_SUITE_END();
