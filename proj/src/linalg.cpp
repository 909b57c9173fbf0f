#include "projaut/linalg.hpp"

#include <numeric>

namespace projaut {

ScalarMatrix ScalarMatrix::identity(int n) {
  ScalarMatrix m(n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = Scalar::one();
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y) {
  if (x.cols != y.rows) fail(errc::dimension_mismatch, "matrix product shape mismatch");
  ScalarMatrix out(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(r, k).is_zero()) continue;
      for (int c = 0; c < y.cols; ++c)
        out.at(r, c) += x.at(r, k) * y.at(k, c);
    }
  return out;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols)
    fail(errc::dimension_mismatch, "matrix-vector shape mismatch");
  std::vector<Scalar> out(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!at(r, c).is_zero()) out[static_cast<size_t>(r)] += at(r, c) * v[static_cast<size_t>(c)];
  return out;
}

namespace {

void require_exact(const ScalarMatrix& a, const std::vector<Scalar>& rhs) {
  for (const Scalar& s : a.e)
    if (!s.is_exact()) fail(errc::unsupported_ring, "elimination requires exact entries");
  for (const Scalar& s : rhs)
    if (!s.is_exact()) fail(errc::unsupported_ring, "elimination requires exact entries");
}

}  // namespace

AffineSolution solve_affine(const ScalarMatrix& a, const std::vector<Scalar>& rhs) {
  if (static_cast<int>(rhs.size()) != a.rows)
    fail(errc::dimension_mismatch, "right-hand side length mismatch");
  require_exact(a, rhs);

  ScalarMatrix m = a;
  std::vector<Scalar> b = rhs;
  int n = a.cols;

  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(static_cast<size_t>(n), -1);
  int row = 0;
  for (int col = 0; col < n && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(m.at(pr, c), m.at(row, c));
    std::swap(b[static_cast<size_t>(pr)], b[static_cast<size_t>(row)]);

    Scalar inv = m.at(row, col).inverse();
    for (int c = col; c < n; ++c) m.at(row, c) *= inv;
    b[static_cast<size_t>(row)] *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (int c = col; c < n; ++c) m.at(r, c) -= factor * m.at(row, c);
      b[static_cast<size_t>(r)] -= factor * b[static_cast<size_t>(row)];
    }
    pivot_row_of_col[static_cast<size_t>(col)] = row;
    pivot_col_of_row.push_back(col);
    ++row;
  }

  AffineSolution out;
  out.rank = row;
  for (int r = row; r < m.rows; ++r)
    if (!b[static_cast<size_t>(r)].is_zero()) {
      out.consistent = false;
      return out;
    }

  out.particular.assign(static_cast<size_t>(n), Scalar::zero());
  for (int r = 0; r < row; ++r)
    out.particular[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] =
        b[static_cast<size_t>(r)];

  for (int col = 0; col < n; ++col) {
    if (pivot_row_of_col[static_cast<size_t>(col)] >= 0) continue;
    std::vector<Scalar> dir(static_cast<size_t>(n), Scalar::zero());
    dir[static_cast<size_t>(col)] = Scalar::one();
    for (int c = 0; c < n; ++c) {
      int pr = pivot_row_of_col[static_cast<size_t>(c)];
      if (pr >= 0) dir[static_cast<size_t>(c)] = -m.at(pr, col);
    }
    out.kernel.push_back(std::move(dir));
  }
  return out;
}

int matrix_rank(const ScalarMatrix& a) {
  return solve_affine(a, std::vector<Scalar>(static_cast<size_t>(a.rows))).rank;
}

std::vector<long> cyclotomic_polynomial(long m) {
  if (m < 1) fail(errc::bad_input, "cyclotomic index must be positive");
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact polynomial division.
  std::vector<long> poly(static_cast<size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    std::vector<long> div = cyclotomic_polynomial(d);
    std::vector<long> quot(poly.size() - div.size() + 1, 0);
    // long division from the top; divisor is monic
    std::vector<long> rem = poly;
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      long coef = rem[static_cast<size_t>(k) + div.size() - 1];
      quot[static_cast<size_t>(k)] = coef;
      if (coef == 0) continue;
      for (size_t j = 0; j < div.size(); ++j)
        rem[static_cast<size_t>(k) + j] -= coef * div[j];
    }
    poly = quot;
  }
  return poly;
}

long euler_phi(long m) {
  long phi = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    phi -= phi / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) phi -= phi / n;
  return phi;
}

ScalarMatrix cyclotomic_companion(long m) {
  std::vector<long> phi_m = cyclotomic_polynomial(m);
  int deg = static_cast<int>(phi_m.size()) - 1;
  ScalarMatrix comp(deg, deg);
  for (int r = 1; r < deg; ++r) comp.at(r, r - 1) = Scalar::one();
  for (int r = 0; r < deg; ++r)
    comp.at(r, deg - 1) = Scalar(-phi_m[static_cast<size_t>(r)]);
  return comp;
}

}  // namespace projaut
