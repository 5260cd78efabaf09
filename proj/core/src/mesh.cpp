#include "romtopt/mesh.hpp"

#include <stdexcept>

namespace romtopt {

GridMesh GridMesh::from_mask(int nx, int ny, double hx, double hy,
                             std::vector<std::uint8_t> mask)
{
  if (nx < 1 || ny < 1) throw std::invalid_argument("GridMesh: nx, ny must be >= 1");
  if (hx <= 0.0 || hy <= 0.0) throw std::invalid_argument("GridMesh: hx, hy must be > 0");
  if (mask.size() != static_cast<std::size_t>(nx) * ny)
    throw std::invalid_argument("GridMesh: mask size mismatch");

  GridMesh m;
  m.nx = nx;
  m.ny = ny;
  m.hx = hx;
  m.hy = hy;
  m.active = std::move(mask);
  m.elem_index.assign(static_cast<std::size_t>(nx) * ny, -1);
  m.node_index.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), -1);

  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      if (!m.active[ix + static_cast<std::size_t>(nx) * iy]) continue;
      m.elem_index[ix + static_cast<std::size_t>(nx) * iy] = m.num_elements++;
      m.elem_coords.emplace_back(ix, iy);
    }
  }
  if (m.num_elements == 0) throw std::invalid_argument("GridMesh: no active elements");

  for (int iy = 0; iy <= ny; ++iy) {
    for (int ix = 0; ix <= nx; ++ix) {
      const bool touches = m.is_active(ix, iy) || m.is_active(ix - 1, iy) ||
                           m.is_active(ix, iy - 1) || m.is_active(ix - 1, iy - 1);
      if (touches)
        m.node_index[ix + static_cast<std::size_t>(nx + 1) * iy] = m.num_nodes++;
    }
  }
  return m;
}

GridMesh GridMesh::rectangle(int nx, int ny, double hx, double hy)
{
  return from_mask(nx, ny, hx, hy,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(nx) * ny, 1));
}

GridMesh GridMesh::lbracket(int nx, int ny, int arm_nx, int arm_ny,
                            double hx, double hy)
{
  if (arm_nx < 1 || arm_nx > nx || arm_ny < 1 || arm_ny > ny)
    throw std::invalid_argument("GridMesh::lbracket: arm size out of range");
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 1);
  for (int iy = arm_ny; iy < ny; ++iy)
    for (int ix = arm_nx; ix < nx; ++ix)
      mask[ix + static_cast<std::size_t>(nx) * iy] = 0;
  return from_mask(nx, ny, hx, hy, std::move(mask));
}

std::array<int, 4> GridMesh::element_nodes(int ix, int iy) const
{
  return {node_id(ix, iy), node_id(ix + 1, iy), node_id(ix + 1, iy + 1),
          node_id(ix, iy + 1)};
}

}  // namespace romtopt
