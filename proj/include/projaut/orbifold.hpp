#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "projaut/errors.hpp"

namespace projaut {

// Quotient data of a group action on a closed Riemann surface: group
// order N, quotient genus g0, and the branch orders of the quotient map.
// Branch orders need not divide N (stabilizer towers of non-cyclic groups);
// only 2 <= m_i <= N is enforced.
struct OrbifoldSignature {
  long group_order = 1;
  long quotient_genus = 0;
  std::vector<long> branch_orders;
};

struct TriangleSignature {
  long a = 2, b = 3, c = 7;

  bool is_hyperbolic() const;  // 1/a + 1/b + 1/c < 1, exact
  friend bool operator==(const TriangleSignature& s, const TriangleSignature& t) {
    return s.a == t.a && s.b == t.b && s.c == t.c;
  }
};

// Solves 2g - 2 = N(2g0 - 2) + N sum(1 - 1/m_i) exactly; nullopt when the
// resulting g is not a non-negative integer (signature not realizable).
std::optional<long> riemann_hurwitz_genus(const OrbifoldSignature& sig);

// Dimension 3g0 - 3 + n of the invariant quadratic differentials for a
// quotient with genus g0 and n branch values. The pair (1, 0) cannot arise
// from a genus >= 2 surface (excluded_case); pairs with a negative value
// signal inputs outside that setting (negative_dimension).
long invariant_quadratic_dimension(long g0, long n);

// Quotient of genus 0 branched over exactly three values; equivalently the
// invariant quadratic-differential space is zero.
bool is_very_large(long g0, long n);

// N / (g - 1) = 2 / (1 - 1/a - 1/b - 1/c), the automorphism count per unit
// of genus forced by Riemann-Hurwitz for triple branching over genus 0.
mpq_class automorphisms_per_genus(const TriangleSignature& sig);

// All hyperbolic triples a <= b <= c with ratio >= ratio_min, sorted by
// descending ratio (ties in lexicographic order).
//
// Ratios of the family (2, 3, c) accumulate at 12 from above, so the
// uncapped search is finite only for ratio_min > 12; a derived cap on c is
// asserted in-code. For smaller thresholds pass an explicit bound on c.
std::vector<TriangleSignature> enumerate_triangle_signatures(const mpq_class& ratio_min);
std::vector<TriangleSignature> enumerate_triangle_signatures(const mpq_class& ratio_min,
                                                             long max_c);

// Order (s - 2(m-1))/m of the pushforward of a quadratic differential with
// a zero of order s at a point with stabilizer order m: holomorphic exactly
// when s >= 2(m-1), a genuine pole otherwise.
struct QuotientOrder {
  mpq_class order;
  bool holomorphic;
};
QuotientOrder quotient_differential_order(long zero_order, long stabilizer_order);

// Genus (n-1)(n-2)/2 of the degree-n Fermat curve.
long fermat_genus(long n);

}  // namespace projaut
