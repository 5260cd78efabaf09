#ifndef ROMTOPT_ELASTICITY_HPP
#define ROMTOPT_ELASTICITY_HPP

#include <array>
#include <vector>

#include "romtopt/csr.hpp"
#include "romtopt/dense.hpp"
#include "romtopt/material.hpp"
#include "romtopt/mesh.hpp"

namespace romtopt {

struct FixedDof {
  int node = 0;  // compact node id
  int comp = 0;  // 0 = x, 1 = y
};

struct PointLoad {
  int node = 0;  // compact node id
  int comp = 0;
  double magnitude = 0.0;  // N
};

// Maps the full displacement space (2 dofs per active node) onto the free
// space left after Dirichlet elimination. The stiffness operator, loads and
// all solver-facing vectors live in the free space.
struct DofMap {
  int num_full = 0;
  int num_free = 0;
  std::vector<int> full_to_free;  // -1 for fixed dofs
  std::vector<int> free_to_full;

  static DofMap build(const GridMesh& mesh, const std::vector<FixedDof>& fixed);

  bool is_fixed(int node, int comp) const
  {
    return full_to_free[2 * node + comp] < 0;
  }

  Vector expand(const Vector& free_values) const;   // zeros at fixed dofs
  Vector restrict_to_free(const Vector& full_values) const;
};

// Bilinear quadrilateral plane-stress element stiffness for unit Young's
// modulus and unit thickness, 2x2 Gauss quadrature. 8x8, dof order
// (ux0, uy0, ux1, uy1, ...) counterclockwise from the lower-left node.
DenseMatrix element_stiffness_unit(double hx, double hy, double nu);

// Plane-stress constitutive matrix (3x3, Voigt order sx, sy, txy).
DenseMatrix plane_stress_matrix(double youngs_modulus, double nu);

// Centroid strain-displacement matrix (3x8).
DenseMatrix element_b_matrix_centroid(double hx, double hy);

// K(rho) = sum_e E(rho_e) K_e^unit with Dirichlet elimination folded in.
CsrMatrix assemble_stiffness(const GridMesh& mesh, const DofMap& dofs,
                             const Vector& rho, const MaterialModel& material);

// Point loads on free dofs. Throws if a load sits on a fixed dof.
Vector assemble_load(const GridMesh& mesh, const DofMap& dofs,
                     const std::vector<PointLoad>& loads);

// Per-element centroid von Mises stress of the solid material law,
// relaxed by rho^q. `u_free` is a converged displacement in free space.
Vector von_mises(const GridMesh& mesh, const DofMap& dofs, const Vector& u_free,
                 const Vector& rho, const MaterialModel& material);

// Element dof gather: the 8 full-space dof ids of element (ix, iy).
std::array<int, 8> element_dofs(const GridMesh& mesh, int ix, int iy);

}  // namespace romtopt

#endif
