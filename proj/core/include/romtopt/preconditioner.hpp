#ifndef ROMTOPT_PRECONDITIONER_HPP
#define ROMTOPT_PRECONDITIONER_HPP

#include <vector>

#include "romtopt/csr.hpp"

namespace romtopt {

enum class PreconditionerKind { Jacobi, IC0 };

// SPD preconditioner: Jacobi (inverse diagonal) or zero-fill incomplete
// Cholesky on the lower-triangular sparsity pattern of A. An IC0 breakdown
// (non-positive pivot) falls back to Jacobi; `fell_back` records that.
class Preconditioner {
public:
  static Preconditioner build(const CsrMatrix& a, PreconditionerKind kind);

  // z = M^{-1} r
  void apply(const Vector& r, Vector& z) const;
  Vector apply(const Vector& r) const;

  PreconditionerKind kind() const { return kind_; }
  bool fell_back() const { return fell_back_; }

private:
  PreconditionerKind kind_ = PreconditionerKind::Jacobi;
  bool fell_back_ = false;
  int n_ = 0;

  Vector inv_diag_;  // Jacobi

  // IC0 factor L in CSR (lower triangular incl. diagonal).
  std::vector<int> l_offsets_;
  std::vector<int> l_cols_;
  std::vector<double> l_values_;
};

}  // namespace romtopt

#endif
