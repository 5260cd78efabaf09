#ifndef ROMTOPT_BASIS_HPP
#define ROMTOPT_BASIS_HPP

#include <string>

#include "romtopt/dense.hpp"

namespace romtopt {

enum class BasisMode { QR, SVD };

// What happens to a saturated SVD basis (rank == r_max) when the next
// snapshot arrives: re-initialize from the incoming snapshot (discards
// history), or evict the least dominant mode to make room. SVD modes are
// not time-ordered, so "oldest" is read as weakest.
enum class SvdSaturationPolicy { Reinit, DropOldest };

// On-the-fly orthonormal snapshot basis, grown one snapshot at a time by
// either Gram-Schmidt (QR mode) or rank-one SVD updates (SVD mode). The
// columns of phi stay orthonormal; a cheap first-vs-last column check
// triggers a full QR repair when round-off accumulates.
struct BasisState {
  BasisMode mode = BasisMode::SVD;
  int dim = 0;    // snapshot length N_s, fixed after the first update
  int r_max = 10;
  double tol = 1e-9;  // linear-dependency tolerance
  SvdSaturationPolicy saturation = SvdSaturationPolicy::Reinit;

  DenseMatrix phi;         // dim x rank, orthonormal columns
  Vector singular_values;  // SVD mode, ordered as produced by the update
  DenseMatrix psi;         // SVD mode, accumulated right factors
  long update_count = 0;   // snapshots seen

  int rank() const { return phi.cols; }
};

BasisState make_basis(BasisMode mode, int r_max, double tol,
                      SvdSaturationPolicy saturation = SvdSaturationPolicy::Reinit);

// Gram-Schmidt update. A snapshot within `tol` of span(phi) leaves the
// basis unchanged; at rank r_max the first (oldest) column is dropped
// before the update. A zero first snapshot is ignored (returns false).
bool qr_update(BasisState& state, const Vector& snapshot);

// Rank-one SVD initialization: rank 1 when ||c|| > tol, empty otherwise.
void svd_init(BasisState& state, const Vector& snapshot);

// Rank-one SVD update. At rank 0 or rank r_max the state is re-seeded per
// the saturation policy. A snapshot numerically dependent on the basis
// (projection residual below tol) updates the factors at constant rank.
void svd_update(BasisState& state, const Vector& snapshot);

void basis_update(BasisState& state, const Vector& snapshot);

// Batch POD: first r left singular vectors of the snapshot matrix
// (columns = snapshots). Used as an offline utility and test oracle.
// Requests beyond the numerical rank return only the rank columns.
DenseMatrix pod_batch(const DenseMatrix& snapshots, int r);

// Binary basis container: magic "RBAS", u32 version, u64 dim, u64 rank,
// u32 mode, column-major phi doubles, then rank singular values when
// mode == SVD.
void save_basis(const BasisState& state, const std::string& path);
BasisState load_basis(const std::string& path);

}  // namespace romtopt

#endif
