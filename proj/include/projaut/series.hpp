#pragma once

#include <vector>

#include "projaut/scalar.hpp"

namespace projaut {

// Default truncation order for law checking: high enough that accidental
// vanishing of a nonzero series is implausible, small enough to stay fast.
inline constexpr int kDefaultLawOrder = 16;

// Formal power series truncated at a fixed order N (inclusive): the
// coefficients c0..cN are exact scalars and nothing beyond cN is ever read.
// Binary operations truncate to the minimum order of the operands.
class Series {
public:
  explicit Series(std::vector<Scalar> coeffs);

  static Series zero(int order);
  static Series constant(const Scalar& value, int order);
  static Series identity(int order);     // w
  static Series exponential(int order);  // sum_k w^k / k!

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_zero() const;
  // True when every coefficient of degree >= 2 vanishes.
  bool is_affine() const;

  // Restriction to a lower order, or zero-padding to a higher one (the
  // latter is only meaningful for polynomial data).
  Series truncated(int order) const;
  Series derivative() const;  // insufficient_order on constants of order 0

  friend Series operator+(const Series&, const Series&);
  friend Series operator-(const Series&, const Series&);
  friend Series operator*(const Series&, const Series&);
  friend Series operator/(const Series&, const Series&);  // b(0) != 0
  friend Series operator*(const Scalar&, const Series&);
  Series operator-() const;

private:
  std::vector<Scalar> c_;
};

// f(g(w)) truncated to the minimum order; requires g(0) = 0
// (nonzero_constant_term otherwise).
Series compose(const Series& f, const Series& g);

// Compositional inverse: g with f(g(w)) = w up to the common order.
// Requires f(0) = 0 and f'(0) != 0 (not_invertible otherwise).
Series revert(const Series& f);

// Schwarzian derivative (f''/f')' - (1/2)(f''/f')^2, exact to order N-3.
// Requires f'(0) != 0 (not_locally_injective) and N >= 3.
Series schwarzian(const Series& f);

// S(f o g) - (S(f) o g) * g'^2 - S(g); identically zero certifies the
// Schwarzian cocycle law at the available order.
Series cocycle_residual(const Series& f, const Series& g);

// True iff the Schwarzian vanishes at the available order. This is a
// truncation-relative certificate: at order N it certifies agreement with
// a Moebius map up to order N, never a claim about the analytic function.
bool is_moebius_series(const Series& f);

}  // namespace projaut
