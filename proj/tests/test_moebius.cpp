#include <doctest.h>

#include <random>

#include "projaut/moebius.hpp"
#include "test_oracles.hpp"

using namespace projaut;

TEST_SUITE_BEGIN("moebius");

namespace {

MobiusMap random_map(std::mt19937_64& rng) {
  for (;;) {
    Scalar a{oracle::random_rational(rng)}, b{oracle::random_rational(rng)};
    Scalar c{oracle::random_rational(rng)}, d{oracle::random_rational(rng)};
    if (!(a * d - b * c).is_zero()) return MobiusMap(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("construction rejects singular matrices") {
  CHECK_THROWS_AS(MobiusMap(1, 2, 2, 4), Error);
  CHECK_THROWS_AS(MobiusMap(0, 0, 0, 1), Error);
}

TEST_CASE("normalization makes equality entrywise") {
  CHECK(MobiusMap(2, 0, 0, 2) == MobiusMap::identity());
  CHECK(MobiusMap(Scalar(-1), Scalar::zero(), Scalar::zero(), Scalar(-1)) ==
        MobiusMap::identity());
  // first nonzero entry rescaled to 1
  MobiusMap f(0, 3, 6, 9);
  CHECK(f.a().is_zero());
  CHECK(f.b() == Scalar::one());
  CHECK(f.c() == Scalar(2));
  CHECK(f.d() == Scalar(3));
}

TEST_CASE("composition") {
  MobiusMap add1 = MobiusMap::translation(Scalar::one());
  MobiusMap dbl = MobiusMap::scaling(Scalar(2));
  // compose(f, g) applies g first: (z -> z + 1) after (z -> 2z) is 2z + 1
  MobiusMap both = compose(add1, dbl);
  CHECK(both == MobiusMap(2, 1, 0, 1));

  CHECK(compose(MobiusMap::identity(), both) == both);
  CHECK(compose(both, MobiusMap::identity()) == both);
  CHECK(compose(MobiusMap::inversion(), MobiusMap::inversion()) == MobiusMap::identity());
  CHECK(compose(both, both.inverse()) == MobiusMap::identity());
}

TEST_CASE("associativity and the action law on random maps") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    MobiusMap f = random_map(rng), g = random_map(rng), h = random_map(rng);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    SpherePoint p{Scalar(oracle::random_rational(rng))};
    CHECK(compose(f, g).apply(p) == f.apply(g.apply(p)));
  }
}

TEST_CASE("evaluation handles infinity and poles") {
  CHECK(MobiusMap::identity().apply(Scalar(5)) == SpherePoint(Scalar(5)));
  CHECK(MobiusMap::inversion().apply(Scalar::zero()) == SpherePoint::infinity());
  CHECK(MobiusMap::inversion().apply(SpherePoint::infinity()) == SpherePoint(Scalar::zero()));
  CHECK(MobiusMap::translation(Scalar::one()).apply(SpherePoint::infinity()) ==
        SpherePoint::infinity());

  // (2z + 1)/(z + 1) at 1 -> 3/2, and its pole goes to infinity
  MobiusMap f(2, 1, 1, 1);
  CHECK(f.apply(Scalar::one()) == SpherePoint(Scalar::rational(3, 2)));
  CHECK(f.apply(Scalar(-1)) == SpherePoint::infinity());
  CHECK(f.apply(SpherePoint::infinity()) == SpherePoint(Scalar(2)));
}

TEST_CASE("taylor expansion") {
  Series id = MobiusMap::identity().taylor(Scalar::zero(), 4);
  CHECK(id.coeff(0).is_zero());
  CHECK(id.coeff(1) == Scalar::one());
  for (int k = 2; k <= 4; ++k) CHECK(id.coeff(k).is_zero());

  // 1/z around 1: geometric series oracle for 1/(1 + w)
  Series inv = MobiusMap::inversion().taylor(Scalar::one(), 3);
  std::vector<mpq_class> geo = oracle::geometric_series(-1, 3);
  for (int k = 0; k <= 3; ++k) CHECK(inv.coeff(k) == Scalar(geo[static_cast<size_t>(k)]));

  // affine map 2z + 1 around 7
  MobiusMap aff(2, 1, 0, 1);
  Series s = aff.taylor(Scalar(7), 2);
  CHECK(s.coeff(0) == Scalar(15));
  CHECK(s.coeff(1) == Scalar(2));
  CHECK(s.coeff(2).is_zero());

  CHECK_THROWS_AS(MobiusMap::inversion().taylor(Scalar::zero(), 3), Error);
}

TEST_CASE("taylor agrees with the independent expansion oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    MobiusMap f = random_map(rng);
    Scalar center{oracle::random_rational(rng)};
    if ((f.c() * center + f.d()).is_zero()) continue;
    Series t = f.taylor(center, 8);
    // constant term is the direct evaluation at the center
    SpherePoint image = f.apply(center);
    REQUIRE_FALSE(image.is_infinity());
    CHECK(t.coeff(0) == image.value());
    // full expansion against independent polynomial long division
    oracle::Poly num{(f.a() * center + f.b()).rat(), f.a().rat()};
    oracle::Poly den{(f.c() * center + f.d()).rat(), f.c().rat()};
    oracle::Poly series = oracle::poly_divide_series(num, den, 8);
    for (int k = 0; k <= 8; ++k) CHECK(t.coeff(k) == Scalar(series[static_cast<size_t>(k)]));
  }
}

TEST_CASE("schwarzian kernel: taylor expansions of moebius maps") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    MobiusMap f = random_map(rng);
    Scalar center{oracle::random_rational(rng)};
    if ((f.c() * center + f.d()).is_zero()) continue;
    CHECK(schwarzian(f.taylor(center, 12)).is_zero());
  }
}

TEST_CASE("taylor commutes with composition through series composition") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    MobiusMap f = random_map(rng), g = random_map(rng);
    Scalar center{oracle::random_rational(rng)};
    if ((g.c() * center + g.d()).is_zero()) continue;
    SpherePoint mid = g.apply(center);
    if (mid.is_infinity()) continue;
    if ((f.c() * mid.value() + f.d()).is_zero()) continue;
    // T_center(f o g) = T_{g(center)}(f) o (T_center(g) - g(center))
    Series lhs = compose(f, g).taylor(center, 8);
    Series inner = g.taylor(center, 8) - Series::constant(mid.value(), 8);
    Series rhs = compose(f.taylor(mid.value(), 8), inner);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_SUITE_END();
