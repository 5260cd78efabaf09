#ifndef ROMTOPT_FILTER_HPP
#define ROMTOPT_FILTER_HPP

#include "romtopt/csr.hpp"
#include "romtopt/mesh.hpp"
#include "romtopt/preconditioner.hpp"

namespace romtopt {

enum class FilterKind { None, Helmholtz, Mass };

struct FilterSpec {
  FilterKind kind = FilterKind::Helmholtz;
  double radius = 0.0;  // m, Helmholtz only
};

// Density regularization, mapping raw design variables x to physical
// densities rho. Both filters are self-adjoint and preserve constants.
//
//   Helmholtz: rho solves (-r^2 Lap + I) rho = x on the cell-centered
//     5-point stencil with Neumann boundaries, by CG + Jacobi at a fixed
//     tight tolerance. This solve is not part of the accelerated sequence.
//   Mass: rho = D^{-1} M x with M the 9-point tensor [1 2 1]x[1 2 1]
//     overlap stencil over active neighbors and D its lumped row sums.
class DensityFilter {
public:
  static DensityFilter build(const GridMesh& mesh, const FilterSpec& spec);

  Vector apply(const Vector& x) const;
  // dJ/dx = F^T dJ/drho; self-adjoint, so Helmholtz reuses the same solve.
  Vector chain_rule(const Vector& dj_drho) const;

  FilterKind kind() const { return spec_.kind; }

private:
  FilterSpec spec_;
  int n_ = 0;

  // Helmholtz operator and its preconditioner
  CsrMatrix op_;
  Preconditioner precond_;

  // Mass filter: symmetric weight matrix and lumped row sums
  CsrMatrix mass_;
  Vector lumped_;

  Vector solve_helmholtz(const Vector& rhs) const;
};

}  // namespace romtopt

#endif
