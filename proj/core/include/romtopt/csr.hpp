#ifndef ROMTOPT_CSR_HPP
#define ROMTOPT_CSR_HPP

#include <vector>

#include "romtopt/vec.hpp"

namespace romtopt {

// Compressed sparse row matrix with full (not half) symmetric storage.
// Column indices are sorted within each row. The solvers in this library
// assume the operator is symmetric positive definite; assembly routines
// are responsible for producing matrices that satisfy that.
struct CsrMatrix {
  int n = 0;
  std::vector<int> row_offsets;  // size n+1
  std::vector<int> col_indices;  // size nnz, sorted per row
  std::vector<double> values;    // size nnz

  int nnz() const { return static_cast<int>(col_indices.size()); }

  double diagonal(int row) const;

  // Frobenius norm, used for scale-relative tolerances.
  double frobenius_norm() const;
};

// Coordinate-format entry used during assembly.
struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Builds CSR from triplets. Duplicate entries are summed. Accumulation
// happens in sorted (row, col) order so repeated assembly of the same
// triplet list is bitwise reproducible.
CsrMatrix csr_from_triplets(int n, std::vector<Triplet> triplets);

// y = A*x
Vector spmv(const CsrMatrix& A, const Vector& x);
void spmv(const CsrMatrix& A, const Vector& x, Vector& y);

// Structural + value symmetry check, |a_ij - a_ji| <= tol * max|a|.
bool is_symmetric(const CsrMatrix& A, double tol);

}  // namespace romtopt

#endif
