#include "romtopt/preconditioner.hpp"

#include <cmath>
#include <stdexcept>

namespace romtopt {

namespace {

// Zero-fill incomplete Cholesky on the lower-triangular pattern of A.
// Returns false on a non-positive pivot.
bool factor_ic0(const CsrMatrix& a, std::vector<int>& offsets,
                std::vector<int>& cols, std::vector<double>& vals)
{
  const int n = a.n;
  offsets.assign(n + 1, 0);
  cols.clear();
  vals.clear();
  for (int i = 0; i < n; ++i) {
    for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
      if (a.col_indices[k] <= i) {
        cols.push_back(a.col_indices[k]);
        vals.push_back(a.values[k]);
      }
    }
    offsets[i + 1] = static_cast<int>(cols.size());
  }

  for (int i = 0; i < n; ++i) {
    const int begin = offsets[i], end = offsets[i + 1];
    if (end == begin || cols[end - 1] != i) return false;  // missing diagonal
    for (int k = begin; k < end - 1; ++k) {
      const int j = cols[k];
      // dot of rows i and j over shared columns < j
      double s = vals[k];
      int pi = begin, pj = offsets[j];
      const int ej = offsets[j + 1] - 1;  // exclude diagonal of row j
      while (pi < k && pj < ej) {
        if (cols[pi] == cols[pj]) {
          s -= vals[pi] * vals[pj];
          ++pi;
          ++pj;
        } else if (cols[pi] < cols[pj]) {
          ++pi;
        } else {
          ++pj;
        }
      }
      const double ljj = vals[ej];
      vals[k] = s / ljj;
    }
    double d = vals[end - 1];
    for (int k = begin; k < end - 1; ++k) d -= vals[k] * vals[k];
    if (!(d > 0.0)) return false;
    vals[end - 1] = std::sqrt(d);
  }
  return true;
}

}  // namespace

Preconditioner Preconditioner::build(const CsrMatrix& a, PreconditionerKind kind)
{
  Preconditioner m;
  m.n_ = a.n;
  m.inv_diag_.assign(a.n, 0.0);
  for (int i = 0; i < a.n; ++i) {
    const double d = a.diagonal(i);
    if (!(d > 0.0))
      throw std::invalid_argument("Preconditioner: nonpositive diagonal entry");
    m.inv_diag_[i] = 1.0 / d;
  }
  m.kind_ = PreconditionerKind::Jacobi;

  if (kind == PreconditionerKind::IC0) {
    if (factor_ic0(a, m.l_offsets_, m.l_cols_, m.l_values_)) {
      m.kind_ = PreconditionerKind::IC0;
    } else {
      m.fell_back_ = true;  // keep Jacobi
    }
  }
  return m;
}

void Preconditioner::apply(const Vector& r, Vector& z) const
{
  if (static_cast<int>(r.size()) != n_)
    throw std::invalid_argument("Preconditioner::apply: dimension mismatch");
  z.resize(n_);
  if (kind_ == PreconditionerKind::Jacobi) {
    for (int i = 0; i < n_; ++i) z[i] = r[i] * inv_diag_[i];
    return;
  }
  // forward solve L y = r
  for (int i = 0; i < n_; ++i) {
    double s = r[i];
    const int end = l_offsets_[i + 1] - 1;
    for (int k = l_offsets_[i]; k < end; ++k) s -= l_values_[k] * z[l_cols_[k]];
    z[i] = s / l_values_[end];
  }
  // backward solve L^T z = y (column sweep over the lower factor)
  for (int i = n_ - 1; i >= 0; --i) {
    const int end = l_offsets_[i + 1] - 1;
    z[i] /= l_values_[end];
    const double zi = z[i];
    for (int k = l_offsets_[i]; k < end; ++k) z[l_cols_[k]] -= l_values_[k] * zi;
  }
}

Vector Preconditioner::apply(const Vector& r) const
{
  Vector z;
  apply(r, z);
  return z;
}

}  // namespace romtopt
