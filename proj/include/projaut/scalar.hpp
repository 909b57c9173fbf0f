#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>

#include "projaut/errors.hpp"

namespace projaut {

// Supported coefficient rings. The three exact rings are fields closed
// under +, -, *, / by nonzero elements, with decidable equality:
//
//   rational    Q
//   gaussian    Q(i),  stored as a + b*i
//   eisenstein  Q(w),  stored as a + b*w with w = e^{2*pi*i/3}, w^2 = -1 - w
//
// bigfloat is an arbitrary-precision complex float used for numeric
// cross-checks only; it never mixes implicitly with the exact rings.
enum class Ring { rational, gaussian, eisenstein, bigfloat };

const char* ring_name(Ring r);

inline constexpr unsigned kBigFloatPrecBits = 256;

struct BigComplex {
  mpf_class re;
  mpf_class im;
};

class Scalar {
public:
  Scalar() : ring_(Ring::rational), a_(0), b_(0) {}
  Scalar(long n) : ring_(Ring::rational), a_(n), b_(0) {}  // NOLINT: implicit
  Scalar(const mpq_class& q) : ring_(Ring::rational), a_(q), b_(0) {}

  static Scalar rational(const mpq_class& q) { return Scalar(q); }
  static Scalar rational(long num, long den);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar eisenstein(const mpq_class& a, const mpq_class& b);
  static Scalar bigfloat(const mpf_class& re, const mpf_class& im);

  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return gaussian(0, 1); }
  static Scalar omega() { return eisenstein(0, 1); }  // primitive cube root

  // zeta_m^k for m whose relevant root order divides 4 or 6; throws
  // unsupported_ring when the reduced order is outside {1,2,3,4,6}.
  static Scalar root_of_unity(long k, long m);

  Ring ring() const { return ring_; }
  bool is_exact() const { return ring_ != Ring::bigfloat; }
  bool is_zero() const;
  bool is_rational() const { return ring_ == Ring::rational; }

  // Coordinates against the ring basis {1, u}; valid for exact rings only.
  const mpq_class& basis_a() const;
  const mpq_class& basis_b() const;
  // Rational value; requires ring() == rational.
  const mpq_class& rat() const;

  const BigComplex& big() const;
  Scalar to_bigfloat() const;

  Scalar operator-() const;
  Scalar inverse() const;  // division_by_zero on 0

  friend Scalar operator+(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&, const Scalar&);
  friend Scalar operator*(const Scalar&, const Scalar&);
  friend Scalar operator/(const Scalar&, const Scalar&);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Exact equality. Values in Q(i) and Q(w) with nonzero u-part are unequal
  // (the rings intersect in Q, and real values are canonically demoted).
  // Comparing an exact value with a bigfloat throws incompatible_rings.
  friend bool operator==(const Scalar&, const Scalar&);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  std::string str() const;

private:
  Ring ring_;
  mpq_class a_, b_;
  std::shared_ptr<const BigComplex> bf_;

  void canonicalize();
  friend Ring common_ring(const Scalar&, const Scalar&);
};

std::ostream& operator<<(std::ostream&, const Scalar&);
std::string to_string(const Scalar&);

// Parses exact scalar literals: "3", "-5/7", "1/2+3/4*i", "1-2*w", "i",
// "-w". Floating literals are rejected (bad_input); bigfloat values have
// no literal form.
Scalar parse_scalar(const std::string& text);

mpq_class make_mpq(long num, long den);
mpq_class parse_mpq(const std::string& text);

}  // namespace projaut
