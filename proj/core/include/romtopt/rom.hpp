#ifndef ROMTOPT_ROM_HPP
#define ROMTOPT_ROM_HPP

#include "romtopt/csr.hpp"
#include "romtopt/dense.hpp"

namespace romtopt {

enum class XRefPolicy { Zero, PreviousSolution };

struct RomConfig {
  double kappa_rom = 1e-2;  // in (0, 1)
  XRefPolicy x_ref = XRefPolicy::Zero;
};

enum class RomStatus { Ok, NoBasis, NotPositiveDefinite };

struct RomSolution {
  RomStatus status = RomStatus::Ok;
  Vector x;        // x_ref + phi * reduced
  Vector reduced;  // coordinates in the basis
};

// Galerkin projection onto range(phi): solve (phi^T A phi) xr =
// phi^T (b - A x_ref) by dense Cholesky and lift. The reduced operator is
// symmetrized to kill round-off asymmetry from the sparse products.
// An empty x_ref means zero.
RomSolution rom_solve(const CsrMatrix& a, const Vector& b,
                      const DenseMatrix& phi, const Vector& x_ref);

// ||b - A x|| / ||b||; returns 0 for b = 0 (with the x = 0 convention).
double rom_residual_norm(const CsrMatrix& a, const Vector& b, const Vector& x);

// eps_rom = kappa_rom * r_kkt
double rom_threshold(double kappa_rom, double r_kkt);

}  // namespace romtopt

#endif
