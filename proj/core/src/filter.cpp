#include "romtopt/filter.hpp"

#include <stdexcept>

#include "romtopt/pcg.hpp"

namespace romtopt {

DensityFilter DensityFilter::build(const GridMesh& mesh, const FilterSpec& spec)
{
  if (spec.radius < 0.0)
    throw std::invalid_argument("DensityFilter: radius must be >= 0");

  DensityFilter f;
  f.spec_ = spec;
  f.n_ = mesh.num_elements;
  if (spec.kind == FilterKind::None) return f;

  if (spec.kind == FilterKind::Helmholtz) {
    const double r2 = spec.radius * spec.radius;
    const double cx = r2 / (mesh.hx * mesh.hx);
    const double cy = r2 / (mesh.hy * mesh.hy);
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(f.n_) * 5);
    for (int e = 0; e < f.n_; ++e) {
      const auto [ix, iy] = mesh.elem_coords[e];
      double diag = 1.0;
      const int dx[4] = {-1, 1, 0, 0};
      const int dy[4] = {0, 0, -1, 1};
      const double c[4] = {cx, cx, cy, cy};
      for (int k = 0; k < 4; ++k) {
        // missing neighbor = homogeneous Neumann, no flux term
        if (!mesh.is_active(ix + dx[k], iy + dy[k])) continue;
        const int nb = mesh.elem_id(ix + dx[k], iy + dy[k]);
        diag += c[k];
        trip.push_back({e, nb, -c[k]});
      }
      trip.push_back({e, e, diag});
    }
    f.op_ = csr_from_triplets(f.n_, std::move(trip));
    f.precond_ = Preconditioner::build(f.op_, PreconditionerKind::Jacobi);
    return f;
  }

  // Mass filter: tensor weights 2 (center), 1 (offset) per axis.
  std::vector<Triplet> trip;
  f.lumped_.assign(f.n_, 0.0);
  for (int e = 0; e < f.n_; ++e) {
    const auto [ix, iy] = mesh.elem_coords[e];
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (!mesh.is_active(ix + dx, iy + dy)) continue;
        const double w = (dx == 0 ? 2.0 : 1.0) * (dy == 0 ? 2.0 : 1.0);
        trip.push_back({e, mesh.elem_id(ix + dx, iy + dy), w});
        f.lumped_[e] += w;
      }
    }
  }
  f.mass_ = csr_from_triplets(f.n_, std::move(trip));
  return f;
}

Vector DensityFilter::solve_helmholtz(const Vector& rhs) const
{
  PcgSettings s;
  s.eps = 1e-10;
  s.max_iterations = 100000;
  const PcgReport rep = pcg(op_, rhs, Vector(), s, precond_);
  if (!rep.converged())
    throw std::runtime_error("DensityFilter: Helmholtz CG did not converge");
  return rep.x;
}

Vector DensityFilter::apply(const Vector& x) const
{
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("DensityFilter::apply: size mismatch");
  switch (spec_.kind) {
    case FilterKind::None:
      return x;
    case FilterKind::Helmholtz:
      return solve_helmholtz(x);
    case FilterKind::Mass: {
      Vector rho = spmv(mass_, x);
      for (int i = 0; i < n_; ++i) rho[i] /= lumped_[i];
      return rho;
    }
  }
  throw std::logic_error("DensityFilter::apply: unreachable");
}

Vector DensityFilter::chain_rule(const Vector& dj_drho) const
{
  if (static_cast<int>(dj_drho.size()) != n_)
    throw std::invalid_argument("DensityFilter::chain_rule: size mismatch");
  switch (spec_.kind) {
    case FilterKind::None:
      return dj_drho;
    case FilterKind::Helmholtz:
      return solve_helmholtz(dj_drho);
    case FilterKind::Mass: {
      // F = D^{-1} M  =>  F^T = M D^{-1}
      Vector scaled(n_);
      for (int i = 0; i < n_; ++i) scaled[i] = dj_drho[i] / lumped_[i];
      return spmv(mass_, scaled);
    }
  }
  throw std::logic_error("DensityFilter::chain_rule: unreachable");
}

}  // namespace romtopt
