#include "romtopt/rom.hpp"

#include <cmath>
#include <stdexcept>

namespace romtopt {

RomSolution rom_solve(const CsrMatrix& a, const Vector& b,
                      const DenseMatrix& phi, const Vector& x_ref)
{
  RomSolution sol;
  if (phi.cols == 0) {
    sol.status = RomStatus::NoBasis;
    return sol;
  }
  if (phi.rows != a.n || static_cast<int>(b.size()) != a.n)
    throw std::invalid_argument("rom_solve: dimension mismatch");

  const int r = phi.cols;
  DenseMatrix a_phi(a.n, r);
  Vector col(a.n), acol;
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < a.n; ++i) col[i] = phi(i, j);
    spmv(a, col, acol);
    a_phi.set_column(j, acol);
  }

  DenseMatrix reduced_op(r, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      double s = 0.0;
      for (int k = 0; k < a.n; ++k) s += phi(k, i) * a_phi(k, j);
      reduced_op(i, j) = s;
    }
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < j; ++i) {
      const double sym = 0.5 * (reduced_op(i, j) + reduced_op(j, i));
      reduced_op(i, j) = sym;
      reduced_op(j, i) = sym;
    }

  Vector rhs_full = b;
  if (!x_ref.empty()) {
    if (static_cast<int>(x_ref.size()) != a.n)
      throw std::invalid_argument("rom_solve: x_ref dimension mismatch");
    const Vector ax = spmv(a, x_ref);
    for (int i = 0; i < a.n; ++i) rhs_full[i] -= ax[i];
  }
  const Vector rhs = matvec_transposed(phi, rhs_full);

  const CholeskyFactor chol = cholesky(reduced_op);
  if (!chol.ok) {
    sol.status = RomStatus::NotPositiveDefinite;
    return sol;
  }
  sol.reduced = chol.solve(rhs);
  sol.x = x_ref.empty() ? Vector(a.n, 0.0) : x_ref;
  for (int j = 0; j < r; ++j) {
    const double cj = sol.reduced[j];
    for (int i = 0; i < a.n; ++i) sol.x[i] += phi(i, j) * cj;
  }
  return sol;
}

double rom_residual_norm(const CsrMatrix& a, const Vector& b, const Vector& x)
{
  const double nb = norm2(b);
  if (nb == 0.0) return 0.0;
  const Vector ax = spmv(a, x);
  double s = 0.0;
  for (int i = 0; i < a.n; ++i) {
    const double ri = b[i] - ax[i];
    s += ri * ri;
  }
  return std::sqrt(s) / nb;
}

double rom_threshold(double kappa_rom, double r_kkt)
{
  if (r_kkt < 0.0) throw std::invalid_argument("rom_threshold: r_kkt must be >= 0");
  return kappa_rom * r_kkt;
}

}  // namespace romtopt
