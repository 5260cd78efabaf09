#include "romtopt/elasticity.hpp"

#include <cmath>
#include <stdexcept>

namespace romtopt {

DofMap DofMap::build(const GridMesh& mesh, const std::vector<FixedDof>& fixed)
{
  DofMap map;
  map.num_full = mesh.num_dofs();
  map.full_to_free.assign(map.num_full, 0);
  for (const FixedDof& f : fixed) {
    if (f.node < 0 || f.node >= mesh.num_nodes || f.comp < 0 || f.comp > 1)
      throw std::invalid_argument("DofMap: fixed dof out of range");
    map.full_to_free[2 * f.node + f.comp] = -1;
  }
  for (int d = 0; d < map.num_full; ++d) {
    if (map.full_to_free[d] == 0) {
      map.full_to_free[d] = map.num_free++;
      map.free_to_full.push_back(d);
    }
  }
  return map;
}

Vector DofMap::expand(const Vector& free_values) const
{
  if (static_cast<int>(free_values.size()) != num_free)
    throw std::invalid_argument("DofMap::expand: size mismatch");
  Vector full(num_full, 0.0);
  for (int i = 0; i < num_free; ++i) full[free_to_full[i]] = free_values[i];
  return full;
}

Vector DofMap::restrict_to_free(const Vector& full_values) const
{
  if (static_cast<int>(full_values.size()) != num_full)
    throw std::invalid_argument("DofMap::restrict_to_free: size mismatch");
  Vector free(num_free, 0.0);
  for (int i = 0; i < num_free; ++i) free[i] = full_values[free_to_full[i]];
  return free;
}

DenseMatrix plane_stress_matrix(double youngs_modulus, double nu)
{
  DenseMatrix d(3, 3);
  const double f = youngs_modulus / (1.0 - nu * nu);
  d(0, 0) = f;
  d(0, 1) = f * nu;
  d(1, 0) = f * nu;
  d(1, 1) = f;
  d(2, 2) = f * (1.0 - nu) / 2.0;
  return d;
}

namespace {

// Strain-displacement matrix at reference coordinates (xi, eta).
DenseMatrix b_matrix(double hx, double hy, double xi, double eta)
{
  // reference-square node coordinates, counterclockwise from lower-left
  static const double xs[4] = {-1.0, 1.0, 1.0, -1.0};
  static const double es[4] = {-1.0, -1.0, 1.0, 1.0};
  DenseMatrix b(3, 8);
  for (int a = 0; a < 4; ++a) {
    const double dn_dxi = 0.25 * xs[a] * (1.0 + es[a] * eta);
    const double dn_deta = 0.25 * es[a] * (1.0 + xs[a] * xi);
    const double dn_dx = dn_dxi * 2.0 / hx;
    const double dn_dy = dn_deta * 2.0 / hy;
    b(0, 2 * a) = dn_dx;
    b(1, 2 * a + 1) = dn_dy;
    b(2, 2 * a) = dn_dy;
    b(2, 2 * a + 1) = dn_dx;
  }
  return b;
}

}  // namespace

DenseMatrix element_b_matrix_centroid(double hx, double hy)
{
  return b_matrix(hx, hy, 0.0, 0.0);
}

DenseMatrix element_stiffness_unit(double hx, double hy, double nu)
{
  const DenseMatrix d = plane_stress_matrix(1.0, nu);
  const double g = 1.0 / std::sqrt(3.0);
  const double detj = hx * hy / 4.0;
  DenseMatrix k(8, 8);
  for (int gx = 0; gx < 2; ++gx) {
    for (int gy = 0; gy < 2; ++gy) {
      const DenseMatrix b = b_matrix(hx, hy, gx == 0 ? -g : g, gy == 0 ? -g : g);
      // k += B^T D B * detJ
      const DenseMatrix db = matmul(d, b);
      for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
          double s = 0.0;
          for (int c = 0; c < 3; ++c) s += b(c, i) * db(c, j);
          k(i, j) += s * detj;
        }
    }
  }
  return k;
}

std::array<int, 8> element_dofs(const GridMesh& mesh, int ix, int iy)
{
  const std::array<int, 4> nodes = mesh.element_nodes(ix, iy);
  std::array<int, 8> dofs{};
  for (int a = 0; a < 4; ++a) {
    dofs[2 * a] = 2 * nodes[a];
    dofs[2 * a + 1] = 2 * nodes[a] + 1;
  }
  return dofs;
}

CsrMatrix assemble_stiffness(const GridMesh& mesh, const DofMap& dofs,
                             const Vector& rho, const MaterialModel& material)
{
  if (static_cast<int>(rho.size()) != mesh.num_elements)
    throw std::invalid_argument("assemble_stiffness: rho size mismatch");
  if (dofs.num_free < 1)
    throw std::invalid_argument("assemble_stiffness: no free dofs");

  const DenseMatrix ke = element_stiffness_unit(mesh.hx, mesh.hy,
                                                material.poisson_ratio);
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(mesh.num_elements) * 64);
  for (int e = 0; e < mesh.num_elements; ++e) {
    const auto [ix, iy] = mesh.elem_coords[e];
    const double modulus = material.simp_modulus(rho[e]);
    const std::array<int, 8> ed = element_dofs(mesh, ix, iy);
    for (int a = 0; a < 8; ++a) {
      const int ra = dofs.full_to_free[ed[a]];
      if (ra < 0) continue;
      for (int b = 0; b < 8; ++b) {
        const int cb = dofs.full_to_free[ed[b]];
        if (cb < 0) continue;
        trip.push_back({ra, cb, modulus * ke(a, b)});
      }
    }
  }
  return csr_from_triplets(dofs.num_free, std::move(trip));
}

Vector assemble_load(const GridMesh& mesh, const DofMap& dofs,
                     const std::vector<PointLoad>& loads)
{
  Vector b(dofs.num_free, 0.0);
  for (const PointLoad& load : loads) {
    if (load.node < 0 || load.node >= mesh.num_nodes || load.comp < 0 ||
        load.comp > 1)
      throw std::invalid_argument("assemble_load: load node out of range");
    const int free = dofs.full_to_free[2 * load.node + load.comp];
    if (free < 0)
      throw std::invalid_argument("assemble_load: load on a Dirichlet dof");
    b[free] += load.magnitude;
  }
  return b;
}

Vector von_mises(const GridMesh& mesh, const DofMap& dofs, const Vector& u_free,
                 const Vector& rho, const MaterialModel& material)
{
  const Vector u = dofs.expand(u_free);
  const DenseMatrix b = element_b_matrix_centroid(mesh.hx, mesh.hy);
  const DenseMatrix d = plane_stress_matrix(material.youngs_modulus,
                                            material.poisson_ratio);
  const DenseMatrix db = matmul(d, b);

  Vector out(mesh.num_elements, 0.0);
  for (int e = 0; e < mesh.num_elements; ++e) {
    const auto [ix, iy] = mesh.elem_coords[e];
    const std::array<int, 8> ed = element_dofs(mesh, ix, iy);
    double sig[3] = {0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c)
      for (int a = 0; a < 8; ++a) sig[c] += db(c, a) * u[ed[a]];
    const double vm = std::sqrt(sig[0] * sig[0] + sig[1] * sig[1] -
                                sig[0] * sig[1] + 3.0 * sig[2] * sig[2]);
    out[e] = material.relaxed_stress(rho[e], vm);
  }
  return out;
}

}  // namespace romtopt
