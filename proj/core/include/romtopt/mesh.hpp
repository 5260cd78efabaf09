#ifndef ROMTOPT_MESH_HPP
#define ROMTOPT_MESH_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace romtopt {

// Structured quadrilateral grid with an active-element mask. Element (ix, iy)
// covers [ix*hx, (ix+1)*hx] x [iy*hy, (iy+1)*hy]; masks carve non-rectangular
// domains (L-bracket) out of the bounding grid. Elements and nodes carry
// compact indices over the active region only; a node is active when it
// touches at least one active element, so every active element has four
// active nodes.
struct GridMesh {
  int nx = 0, ny = 0;
  double hx = 0.0, hy = 0.0;
  std::vector<std::uint8_t> active;        // nx*ny, ix + nx*iy
  std::vector<int> elem_index;             // nx*ny -> compact id or -1
  std::vector<int> node_index;             // (nx+1)*(ny+1) -> compact id or -1
  std::vector<std::pair<int, int>> elem_coords;  // compact id -> (ix, iy)
  int num_elements = 0;
  int num_nodes = 0;

  static GridMesh rectangle(int nx, int ny, double hx, double hy);

  // Full grid minus the top-right block: active unless
  // ix >= arm_nx and iy >= arm_ny. The left (vertical) arm is arm_nx
  // elements wide, the bottom (horizontal) arm arm_ny elements tall.
  static GridMesh lbracket(int nx, int ny, int arm_nx, int arm_ny,
                           double hx, double hy);

  static GridMesh from_mask(int nx, int ny, double hx, double hy,
                            std::vector<std::uint8_t> mask);

  int num_dofs() const { return 2 * num_nodes; }
  double element_volume() const { return hx * hy; }
  std::vector<double> element_volumes() const
  {
    return std::vector<double>(num_elements, hx * hy);
  }

  bool is_active(int ix, int iy) const
  {
    return ix >= 0 && ix < nx && iy >= 0 && iy < ny &&
           active[ix + static_cast<std::size_t>(nx) * iy] != 0;
  }
  int elem_id(int ix, int iy) const
  {
    return elem_index[ix + static_cast<std::size_t>(nx) * iy];
  }
  int node_id(int ix, int iy) const
  {
    return node_index[ix + static_cast<std::size_t>(nx + 1) * iy];
  }

  // Compact node ids, counterclockwise from the lower-left corner.
  std::array<int, 4> element_nodes(int ix, int iy) const;
};

}  // namespace romtopt

#endif
