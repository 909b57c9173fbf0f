#pragma once

#include <vector>

#include "projaut/scalar.hpp"

namespace projaut {

// Dense matrix over the exact scalar rings. Elimination-based routines
// refuse bigfloat entries: exactness is the whole point here.
struct ScalarMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> e;

  ScalarMatrix() = default;
  ScalarMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

  static ScalarMatrix identity(int n);

  Scalar& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

  friend ScalarMatrix operator*(const ScalarMatrix&, const ScalarMatrix&);
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
};

struct AffineSolution {
  bool consistent = true;
  int rank = 0;
  std::vector<Scalar> particular;            // one solution (free variables = 0)
  std::vector<std::vector<Scalar>> kernel;   // basis of the homogeneous solutions
};

// Exact Gauss-Jordan solution of A x = rhs with first-nonzero pivoting.
AffineSolution solve_affine(const ScalarMatrix& a, const std::vector<Scalar>& rhs);

int matrix_rank(const ScalarMatrix& a);

// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(long m);

// Companion matrix of the m-th cyclotomic polynomial: multiplication by
// zeta_m on the power basis of Q(zeta_m), a phi(m) x phi(m) rational matrix.
ScalarMatrix cyclotomic_companion(long m);

long euler_phi(long m);

}  // namespace projaut
