#include <doctest.h>

#include "projaut/scalar.hpp"

using namespace projaut;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("rational field arithmetic") {
  Scalar x = Scalar::rational(1, 2);
  Scalar y = Scalar::rational(1, 3);
  CHECK(x + y == Scalar::rational(5, 6));
  CHECK(x - y == Scalar::rational(1, 6));
  CHECK(x * y == Scalar::rational(1, 6));
  CHECK(x / y == Scalar::rational(3, 2));
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(x / Scalar::zero(), Error);
}

TEST_CASE("gaussian units and inverses") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK(i * i * i * i == Scalar::one());
  Scalar z = Scalar::gaussian(make_mpq(1, 2), make_mpq(3, 4));
  CHECK(z * z.inverse() == Scalar::one());
  CHECK((z - z).is_zero());
  // values with vanishing imaginary part demote to the rationals
  CHECK((i * i).is_rational());
}

TEST_CASE("eisenstein ring satisfies w^2 + w + 1 = 0") {
  Scalar w = Scalar::omega();
  CHECK(w * w + w + Scalar::one() == Scalar::zero());
  CHECK(w * w * w == Scalar::one());
  Scalar z = Scalar::eisenstein(make_mpq(2, 3), make_mpq(-1, 5));
  CHECK(z * z.inverse() == Scalar::one());
  // the primitive sixth root is 1 + w
  Scalar s6 = Scalar::one() + w;
  Scalar acc = Scalar::one();
  for (int k = 1; k < 6; ++k) {
    acc = acc * s6;
    CHECK(acc != Scalar::one());
  }
  CHECK(acc * s6 == Scalar::one());
}

TEST_CASE("mixing the two imaginary rings is rejected") {
  CHECK_THROWS_AS(Scalar::i() + Scalar::omega(), Error);
  CHECK_THROWS_AS(Scalar::i() * Scalar::omega(), Error);
  // rationals promote into either ring
  CHECK(Scalar(2) * Scalar::i() == Scalar::gaussian(0, 2));
  CHECK(Scalar(2) * Scalar::omega() == Scalar::eisenstein(0, 2));
  // equality across the two rings is decidable without promotion
  CHECK(Scalar::i() != Scalar::omega());
}

TEST_CASE("roots of unity in the supported rings") {
  CHECK(Scalar::root_of_unity(0, 10) == Scalar::one());
  CHECK(Scalar::root_of_unity(3, 6) == Scalar(-1));
  CHECK(Scalar::root_of_unity(1, 4) == Scalar::i());
  CHECK(Scalar::root_of_unity(2, 6) == Scalar::omega());
  CHECK(Scalar::root_of_unity(5, 10) == Scalar(-1));  // zeta_10^5 = -1
  CHECK_THROWS_AS(Scalar::root_of_unity(1, 5), Error);
  CHECK_THROWS_AS(Scalar::root_of_unity(1, 8), Error);
  // zeta_6 has order 6
  Scalar z6 = Scalar::root_of_unity(1, 6);
  Scalar p = Scalar::one();
  for (int k = 0; k < 6; ++k) p = p * z6;
  CHECK(p == Scalar::one());
}

TEST_CASE("bigfloat cross-check ring") {
  Scalar x = Scalar::rational(1, 3).to_bigfloat();
  Scalar y = Scalar(3).to_bigfloat();
  Scalar residue = x * y - Scalar::one().to_bigfloat();
  CHECK(abs(residue.big().re) < mpf_class(1e-70));  // 256-bit arithmetic
  CHECK(residue.big().im == 0);
  // |omega|^2 = 1 numerically
  Scalar w = Scalar::omega().to_bigfloat();
  const BigComplex& b = w.big();
  mpf_class norm = b.re * b.re + b.im * b.im;
  mpf_class err = norm - 1;
  CHECK(abs(err) < mpf_class(1e-70));
  CHECK_THROWS_AS(Scalar::one() + x, Error);
  CHECK_THROWS_AS(Scalar::one() == x, Error);
}

TEST_CASE("printing and parsing round-trip") {
  const char* samples[] = {"0",       "-5",        "7/3",        "1/2+3/4*i",
                           "-2/3*i",  "1-1*w",     "5/6*w",      "-1/2-1/2*i"};
  for (const char* s : samples) {
    Scalar v = parse_scalar(s);
    CHECK(parse_scalar(v.str()) == v);
  }
  CHECK(parse_scalar("i") == Scalar::i());
  CHECK(parse_scalar("-w") == -Scalar::omega());
  CHECK(parse_scalar(" 1/2 + 1/2 * i ") == Scalar::gaussian(make_mpq(1, 2), make_mpq(1, 2)));
  CHECK_THROWS_AS(parse_scalar("1.5"), Error);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("1+2*i+3*w"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_SUITE_END();
