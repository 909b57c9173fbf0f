#include "projaut/series.hpp"

#include <algorithm>

namespace projaut {

Series::Series(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) fail(errc::bad_input, "a series needs at least the constant term");
}

Series Series::zero(int order) {
  if (order < 0) fail(errc::bad_input, "negative truncation order");
  return Series(std::vector<Scalar>(static_cast<size_t>(order) + 1));
}

Series Series::constant(const Scalar& value, int order) {
  Series s = zero(order);
  s.c_[0] = value;
  return s;
}

Series Series::identity(int order) {
  if (order < 1) fail(errc::bad_input, "identity series needs order >= 1");
  Series s = zero(order);
  s.c_[1] = Scalar::one();
  return s;
}

Series Series::exponential(int order) {
  Series s = zero(order);
  mpq_class c = 1;
  s.c_[0] = Scalar(c);
  for (int k = 1; k <= order; ++k) {
    c /= k;
    s.c_[static_cast<size_t>(k)] = Scalar(c);
  }
  return s;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Series::is_affine() const {
  for (size_t k = 2; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

Series Series::truncated(int order) const {
  if (order < 0) fail(errc::bad_input, "negative truncation order");
  std::vector<Scalar> out(c_.begin(),
                          c_.begin() + std::min(c_.size(), static_cast<size_t>(order) + 1));
  out.resize(static_cast<size_t>(order) + 1);
  return Series(std::move(out));
}

Series Series::derivative() const {
  if (order() < 1)
    fail(errc::insufficient_order, "derivative of an order-0 series has no terms");
  std::vector<Scalar> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k)
    out[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
  return Series(std::move(out));
}

Series Series::operator-() const {
  std::vector<Scalar> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = -c_[k];
  return Series(std::move(out));
}

Series operator+(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Scalar> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    out[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return Series(std::move(out));
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Scalar& s, const Series& a) {
  std::vector<Scalar> out(a.coeffs());
  for (auto& c : out) c = s * c;
  return Series(std::move(out));
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Scalar> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Scalar acc;
    for (int j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
    out[static_cast<size_t>(k)] = acc;
  }
  return Series(std::move(out));
}

Series operator/(const Series& a, const Series& b) {
  if (b.coeff(0).is_zero())
    fail(errc::division_by_zero_constant_term,
         "series division needs an invertible constant term");
  int n = std::min(a.order(), b.order());
  std::vector<Scalar> q(static_cast<size_t>(n) + 1);
  Scalar inv0 = b.coeff(0).inverse();
  for (int k = 0; k <= n; ++k) {
    Scalar acc = a.coeff(k);
    for (int j = 0; j < k; ++j) acc -= q[static_cast<size_t>(j)] * b.coeff(k - j);
    q[static_cast<size_t>(k)] = acc * inv0;
  }
  return Series(std::move(q));
}

Series compose(const Series& f, const Series& g) {
  if (!g.coeff(0).is_zero())
    fail(errc::nonzero_constant_term, "composition needs g(0) = 0");
  int n = std::min(f.order(), g.order());
  Series gt = g.truncated(n);
  // Horner evaluation: result = (..(f_n * g + f_{n-1}) * g + ...) + f_0.
  Series acc = Series::constant(f.coeff(n), n);
  for (int k = n - 1; k >= 0; --k)
    acc = acc * gt + Series::constant(f.coeff(k), n);
  return acc;
}

Series revert(const Series& f) {
  if (!f.coeff(0).is_zero() || f.order() < 1 || f.coeff(1).is_zero())
    fail(errc::not_invertible, "reversion needs f(0) = 0 and f'(0) != 0");
  int n = f.order();
  Scalar inv1 = f.coeff(1).inverse();
  std::vector<Scalar> g(static_cast<size_t>(n) + 1);
  g[1] = inv1;
  for (int k = 2; k <= n; ++k) {
    // With g known below degree k, the degree-k coefficient of f(g) is
    // c1 * g_k plus terms involving only lower g coefficients.
    Series partial = Series(g).truncated(k);
    Scalar residue = compose(f.truncated(k), partial).coeff(k);
    g[static_cast<size_t>(k)] = -residue * inv1;
  }
  return Series(std::move(g));
}

Series schwarzian(const Series& f) {
  if (f.order() < 3)
    fail(errc::insufficient_order, "schwarzian needs truncation order >= 3");
  if (f.coeff(1).is_zero())
    fail(errc::not_locally_injective, "schwarzian needs f'(0) != 0");
  Series d1 = f.derivative();
  Series u = d1.derivative() / d1;  // f''/f', exact to order N-2
  return u.derivative() - Scalar::rational(1, 2) * (u * u);
}

Series cocycle_residual(const Series& f, const Series& g) {
  Series lhs = schwarzian(compose(f, g));
  Series gp = g.derivative();
  Series rhs = compose(schwarzian(f), g) * (gp * gp) + schwarzian(g);
  return lhs - rhs;
}

bool is_moebius_series(const Series& f) { return schwarzian(f).is_zero(); }

}  // namespace projaut
