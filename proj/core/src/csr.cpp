#include "romtopt/csr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace romtopt {

double CsrMatrix::diagonal(int row) const
{
  for (int k = row_offsets[row]; k < row_offsets[row + 1]; ++k) {
    if (col_indices[k] == row) return values[k];
  }
  return 0.0;
}

double CsrMatrix::frobenius_norm() const
{
  double s = 0.0;
  for (double v : values) s += v * v;
  return std::sqrt(s);
}

CsrMatrix csr_from_triplets(int n, std::vector<Triplet> triplets)
{
  if (n < 1) throw std::invalid_argument("csr_from_triplets: n must be >= 1");
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
      throw std::invalid_argument("csr_from_triplets: index out of range");
  }
  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });

  CsrMatrix A;
  A.n = n;
  A.row_offsets.assign(n + 1, 0);
  A.col_indices.reserve(triplets.size());
  A.values.reserve(triplets.size());

  std::size_t k = 0;
  for (int row = 0; row < n; ++row) {
    while (k < triplets.size() && triplets[k].row == row) {
      const int col = triplets[k].col;
      double v = 0.0;
      while (k < triplets.size() && triplets[k].row == row &&
             triplets[k].col == col) {
        v += triplets[k].value;
        ++k;
      }
      A.col_indices.push_back(col);
      A.values.push_back(v);
    }
    A.row_offsets[row + 1] = static_cast<int>(A.col_indices.size());
  }
  return A;
}

void spmv(const CsrMatrix& A, const Vector& x, Vector& y)
{
  if (static_cast<int>(x.size()) != A.n)
    throw std::invalid_argument("spmv: dimension mismatch");
  y.resize(A.n);
  for (int i = 0; i < A.n; ++i) {
    double s = 0.0;
    for (int k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k)
      s += A.values[k] * x[A.col_indices[k]];
    y[i] = s;
  }
}

Vector spmv(const CsrMatrix& A, const Vector& x)
{
  Vector y;
  spmv(A, x, y);
  return y;
}

bool is_symmetric(const CsrMatrix& A, double tol)
{
  double amax = 0.0;
  for (double v : A.values) amax = std::max(amax, std::abs(v));
  for (int i = 0; i < A.n; ++i) {
    for (int k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
      const int j = A.col_indices[k];
      // binary search for (j, i)
      const int lo = A.row_offsets[j], hi = A.row_offsets[j + 1];
      auto it = std::lower_bound(A.col_indices.begin() + lo,
                                 A.col_indices.begin() + hi, i);
      if (it == A.col_indices.begin() + hi || *it != i) return false;
      const double aji = A.values[it - A.col_indices.begin()];
      if (std::abs(A.values[k] - aji) > tol * std::max(1.0, amax)) return false;
    }
  }
  return true;
}

}  // namespace romtopt
