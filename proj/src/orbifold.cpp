#include "projaut/orbifold.hpp"

#include <algorithm>
#include <string>

namespace projaut {

bool TriangleSignature::is_hyperbolic() const {
  if (a < 2 || b < 2 || c < 2) return false;
  // 1/a + 1/b + 1/c < 1  <=>  bc + ac + ab < abc  (all positive)
  return b * c + a * c + a * b < a * b * c;
}

std::optional<long> riemann_hurwitz_genus(const OrbifoldSignature& sig) {
  if (sig.group_order < 1) fail(errc::bad_input, "group order must be >= 1");
  if (sig.quotient_genus < 0) fail(errc::bad_input, "quotient genus must be >= 0");
  for (long m : sig.branch_orders)
    if (m < 2 || m > sig.group_order)
      fail(errc::bad_input, "branch orders must satisfy 2 <= m <= N, got " + std::to_string(m));

  mpq_class rhs = mpq_class(sig.group_order) * (2 * sig.quotient_genus - 2);
  for (long m : sig.branch_orders) {
    mpq_class term(sig.group_order, 1);
    term *= mpq_class(m - 1, m);
    term.canonicalize();
    rhs += term;
  }
  mpq_class g = (rhs + 2) / 2;
  if (g.get_den() != 1 || g < 0) return std::nullopt;
  return g.get_num().get_si();
}

long invariant_quadratic_dimension(long g0, long n) {
  if (g0 < 0 || n < 0) fail(errc::bad_input, "invalid quotient data");
  if (g0 == 1 && n == 0)
    fail(errc::excluded_case,
         "an unramified quotient of genus 1 cannot come from a surface of genus >= 2");
  long dim = 3 * g0 - 3 + n;
  if (dim < 0)
    fail(errc::negative_dimension,
         "quotient data (" + std::to_string(g0) + ", " + std::to_string(n) +
             ") cannot arise from a group action on a surface of genus >= 2");
  return dim;
}

bool is_very_large(long g0, long n) { return g0 == 0 && n == 3; }

mpq_class automorphisms_per_genus(const TriangleSignature& sig) {
  if (!sig.is_hyperbolic())
    fail(errc::not_hyperbolic, "triangle signature is not hyperbolic");
  // 2 / (1 - 1/a - 1/b - 1/c) = 2abc / (abc - bc - ac - ab)
  mpq_class ratio(2 * sig.a * sig.b * sig.c,
                  sig.a * sig.b * sig.c - sig.b * sig.c - sig.a * sig.c - sig.a * sig.b);
  ratio.canonicalize();
  return ratio;
}

namespace {

std::vector<TriangleSignature> collect_signatures(const mpq_class& ratio_min, long max_c) {
  if (max_c > 100000) fail(errc::bad_input, "cap on c is limited to 100000");
  std::vector<std::pair<mpq_class, TriangleSignature>> found;
  for (long a = 2; a <= max_c; ++a)
    for (long b = a; b <= max_c; ++b) {
      // even c = max_c gives no hyperbolic triple for this (a, b)
      if (!TriangleSignature{a, b, max_c}.is_hyperbolic()) continue;
      for (long c = b; c <= max_c; ++c) {
        TriangleSignature sig{a, b, c};
        if (!sig.is_hyperbolic()) continue;
        mpq_class ratio = automorphisms_per_genus(sig);
        // Sharpest possible ratio is 84 = 2/(1/42): every hyperbolic triple
        // has 1 - 1/a - 1/b - 1/c >= 1/42.
        if (ratio > 84) fail(errc::bad_input, "ratio above the 84 ceiling; unreachable");
        if (ratio < ratio_min) break;  // ratio decreases as c grows
        found.emplace_back(std::move(ratio), sig);
      }
    }
  std::sort(found.begin(), found.end(), [](const auto& s, const auto& t) {
    if (s.first != t.first) return s.first > t.first;
    return std::tie(s.second.a, s.second.b, s.second.c) <
           std::tie(t.second.a, t.second.b, t.second.c);
  });
  std::vector<TriangleSignature> out;
  out.reserve(found.size());
  for (const auto& [ratio, sig] : found) out.push_back(sig);
  return out;
}

}  // namespace

std::vector<TriangleSignature> enumerate_triangle_signatures(const mpq_class& ratio_min,
                                                             long max_c) {
  if (ratio_min <= 0) fail(errc::bad_input, "ratio threshold must be positive");
  if (max_c < 2) fail(errc::bad_input, "cap on c must be >= 2");
  return collect_signatures(ratio_min, max_c);
}

std::vector<TriangleSignature> enumerate_triangle_signatures(const mpq_class& ratio_min) {
  if (ratio_min <= 12)
    fail(errc::unbounded_enumeration,
         "ratios accumulate at 12 from the (2,3,c) family; thresholds <= 12 need an "
         "explicit cap on c");
  // ratio >= r forces 1/a + 1/b + 1/c >= 1 - 2/r > 5/6, which bounds a <= 3,
  // then b, then c; everything fits under c <= ceil(1 / (1 - 2/r - 1/a - 1/b))
  // and in particular far below the cap derived next. For r > 12 the largest
  // admissible c comes from (2, 3, c): 1/c >= 1 - 2/r - 5/6 = 1/6 - 2/r.
  mpq_class slack = mpq_class(1, 6) - mpq_class(2) / ratio_min;
  if (slack <= 0) fail(errc::bad_input, "unreachable: ratio_min > 12 gives positive slack");
  mpq_class c_bound = 1 / slack;
  long max_c = c_bound.get_num().get_si() / c_bound.get_den().get_si() + 1;
  max_c = std::max(max_c, 7L);
  return collect_signatures(ratio_min, max_c);
}

QuotientOrder quotient_differential_order(long zero_order, long stabilizer_order) {
  if (zero_order < 0) fail(errc::bad_input, "zero order must be >= 0");
  if (stabilizer_order < 1) fail(errc::bad_input, "stabilizer order must be >= 1");
  mpq_class ord(zero_order - 2 * (stabilizer_order - 1), stabilizer_order);
  ord.canonicalize();
  return QuotientOrder{ord, zero_order >= 2 * (stabilizer_order - 1)};
}

long fermat_genus(long n) {
  if (n < 1) fail(errc::bad_input, "degree must be >= 1");
  return (n - 1) * (n - 2) / 2;
}

}  // namespace projaut
