#ifndef ROMTOPT_DENSE_HPP
#define ROMTOPT_DENSE_HPP

#include <vector>

#include "romtopt/vec.hpp"

namespace romtopt {

// Column-major dense matrix. Small by construction: reduced operators,
// basis coefficient blocks and the middle factors of incremental updates.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // rows*cols, column-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return values[static_cast<std::size_t>(j) * rows + i]; }
  double operator()(int i, int j) const { return values[static_cast<std::size_t>(j) * rows + i]; }

  static DenseMatrix identity(int n);

  Vector column(int j) const;
  void set_column(int j, const Vector& v);
};

// y = A*x
Vector matvec(const DenseMatrix& A, const Vector& x);
// y = A^T*x
Vector matvec_transposed(const DenseMatrix& A, const Vector& x);
// C = A*B
DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);

struct SvdResult {
  DenseMatrix u;          // square, orthogonal
  Vector singular_values; // descending, >= 0
  DenseMatrix v;          // square, orthogonal
};

// SVD of a small square matrix by one-sided Jacobi rotations. Columns of
// the input are orthogonalized in place; zero singular values get their
// left vectors from an orthogonal completion. Throws if the sweep
// iteration fails to converge.
SvdResult dense_svd(const DenseMatrix& q);

struct QrResult {
  DenseMatrix q;  // rows x cols, orthonormal columns
  DenseMatrix r;  // cols x cols, upper triangular, nonnegative diagonal
  std::vector<int> deficient_columns;  // |r_ii| < tol
};

// Householder thin QR for rows >= cols, normalized so that diag(R) >= 0.
QrResult thin_qr(const DenseMatrix& b, double rank_tol = 1e-12);

// Cholesky factorization A = L*L^T of a small SPD matrix. Returns false
// (leaving the factor unusable) on a non-positive pivot.
struct CholeskyFactor {
  DenseMatrix l;
  bool ok = false;

  Vector solve(const Vector& rhs) const;
};
CholeskyFactor cholesky(const DenseMatrix& a);

}  // namespace romtopt

#endif
