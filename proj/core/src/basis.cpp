#include "romtopt/basis.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace romtopt {

namespace {

constexpr char kMagic[4] = {'R', 'B', 'A', 'S'};
constexpr std::uint32_t kVersion = 1;

double orthogonality_check_threshold(const BasisState& state)
{
  // first-vs-last column inner product allowed before a QR repair
  return std::min(state.tol,
                  std::numeric_limits<double>::epsilon() * state.dim);
}

void repair_orthogonality(BasisState& state)
{
  if (state.rank() < 2) return;
  double head_tail = 0.0;
  for (int i = 0; i < state.dim; ++i)
    head_tail += state.phi(i, 0) * state.phi(i, state.rank() - 1);
  if (std::abs(head_tail) <= orthogonality_check_threshold(state)) return;
  state.phi = thin_qr(state.phi).q;
}

// y = phi^T c
Vector project(const DenseMatrix& phi, const Vector& c)
{
  return matvec_transposed(phi, c);
}

void subtract_projection(const DenseMatrix& phi, const Vector& coeff, Vector& c)
{
  for (int j = 0; j < phi.cols; ++j) {
    const double lj = coeff[j];
    for (int i = 0; i < phi.rows; ++i) c[i] -= phi(i, j) * lj;
  }
}

void drop_first_column(DenseMatrix& phi)
{
  DenseMatrix next(phi.rows, phi.cols - 1);
  for (int j = 1; j < phi.cols; ++j)
    for (int i = 0; i < phi.rows; ++i) next(i, j - 1) = phi(i, j);
  phi = next;
}

void append_column(DenseMatrix& phi, int dim, const Vector& col)
{
  DenseMatrix next(dim, phi.cols + 1);
  for (int j = 0; j < phi.cols; ++j)
    for (int i = 0; i < dim; ++i) next(i, j) = phi(i, j);
  next.set_column(phi.cols, col);
  phi = next;
}

}  // namespace

BasisState make_basis(BasisMode mode, int r_max, double tol,
                      SvdSaturationPolicy saturation)
{
  if (r_max < 1) throw std::invalid_argument("make_basis: r_max must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("make_basis: tol must be > 0");
  BasisState s;
  s.mode = mode;
  s.r_max = r_max;
  s.tol = tol;
  s.saturation = saturation;
  return s;
}

bool qr_update(BasisState& state, const Vector& snapshot)
{
  if (state.mode != BasisMode::QR)
    throw std::logic_error("qr_update: basis not in QR mode");
  if (state.dim == 0) state.dim = static_cast<int>(snapshot.size());
  if (static_cast<int>(snapshot.size()) != state.dim)
    throw std::invalid_argument("qr_update: snapshot length mismatch");

  if (state.rank() == 0) {
    const double nc = norm2(snapshot);
    if (nc == 0.0) return false;  // nothing to seed from
    Vector col = snapshot;
    scale(1.0 / nc, col);
    state.phi = DenseMatrix(state.dim, 0);
    append_column(state.phi, state.dim, col);
    ++state.update_count;
    return true;
  }

  if (state.rank() == state.r_max) drop_first_column(state.phi);

  Vector residual = snapshot;
  subtract_projection(state.phi, project(state.phi, snapshot), residual);
  const double nj = norm2(residual);
  ++state.update_count;
  if (nj <= state.tol) return false;

  // second projection pass keeps the appended column orthogonal even when
  // the first-pass residual is small relative to the snapshot
  subtract_projection(state.phi, project(state.phi, residual), residual);
  scale(1.0 / norm2(residual), residual);
  append_column(state.phi, state.dim, residual);
  repair_orthogonality(state);
  return true;
}

void svd_init(BasisState& state, const Vector& snapshot)
{
  if (state.dim == 0) state.dim = static_cast<int>(snapshot.size());
  if (static_cast<int>(snapshot.size()) != state.dim)
    throw std::invalid_argument("svd_init: snapshot length mismatch");

  const double nc = norm2(snapshot);
  if (nc > state.tol) {
    state.singular_values = {nc};
    state.phi = DenseMatrix(state.dim, 1);
    Vector col = snapshot;
    scale(1.0 / nc, col);
    state.phi.set_column(0, col);
    state.psi = DenseMatrix::identity(1);
  } else {
    state.phi = DenseMatrix(state.dim, 0);
    state.singular_values.clear();
    state.psi = DenseMatrix(0, 0);
  }
}

namespace {

void drop_weakest_mode(BasisState& state)
{
  // singular values are kept in the descending order produced by the
  // update, so the weakest mode is the last column
  const int r = state.rank();
  DenseMatrix phi(state.dim, r - 1);
  for (int j = 0; j < r - 1; ++j)
    for (int i = 0; i < state.dim; ++i) phi(i, j) = state.phi(i, j);
  DenseMatrix psi(state.psi.rows, r - 1);
  for (int j = 0; j < r - 1; ++j)
    for (int i = 0; i < state.psi.rows; ++i) psi(i, j) = state.psi(i, j);
  state.phi = phi;
  state.psi = psi;
  state.singular_values.resize(r - 1);
}

}  // namespace

void svd_update(BasisState& state, const Vector& snapshot)
{
  if (state.mode != BasisMode::SVD)
    throw std::logic_error("svd_update: basis not in SVD mode");
  if (state.dim == 0) state.dim = static_cast<int>(snapshot.size());
  if (static_cast<int>(snapshot.size()) != state.dim)
    throw std::invalid_argument("svd_update: snapshot length mismatch");

  if (state.rank() == 0 ||
      (state.rank() == state.r_max &&
       state.saturation == SvdSaturationPolicy::Reinit)) {
    svd_init(state, snapshot);
    ++state.update_count;
    return;
  }
  if (state.rank() == state.r_max) drop_weakest_mode(state);

  const int r = state.rank();
  const Vector coeff = project(state.phi, snapshot);
  double p2 = dot(snapshot, snapshot) - dot(coeff, coeff);
  if (p2 < 0.0) p2 = 0.0;  // round-off; treated as dependent below
  const double p = std::sqrt(p2);
  const bool dependent = p < state.tol;

  Vector j;
  if (!dependent) {
    j = snapshot;
    subtract_projection(state.phi, coeff, j);
    scale(1.0 / p, j);
    // re-orthogonalization pass; the raw residual direction loses
    // orthogonality when p is small relative to the snapshot
    subtract_projection(state.phi, project(state.phi, j), j);
    scale(1.0 / norm2(j), j);
  }

  DenseMatrix q(r + 1, r + 1);
  for (int i = 0; i < r; ++i) {
    q(i, i) = state.singular_values[i];
    q(i, r) = coeff[i];
  }
  q(r, r) = dependent ? 0.0 : p;

  const SvdResult mid = dense_svd(q);

  // psi_next = [psi 0; 0 1] * v(:, kept)
  const int kept = dependent ? r : r + 1;
  const int snaps = state.psi.rows;
  DenseMatrix psi(snaps + 1, kept);
  for (int col = 0; col < kept; ++col) {
    for (int i = 0; i < snaps; ++i) {
      double s = 0.0;
      for (int k = 0; k < r; ++k) s += state.psi(i, k) * mid.v(k, col);
      psi(i, col) = s;
    }
    psi(snaps, col) = mid.v(r, col);
  }

  if (dependent) {
    // left factor of q is block diagonal: the last row/column carry the
    // zero singular value, so only the leading r x r block acts on phi
    DenseMatrix phi(state.dim, r);
    for (int col = 0; col < r; ++col)
      for (int i = 0; i < state.dim; ++i) {
        double s = 0.0;
        for (int k = 0; k < r; ++k) s += state.phi(i, k) * mid.u(k, col);
        phi(i, col) = s;
      }
    state.phi = phi;
    state.singular_values.assign(mid.singular_values.begin(),
                                 mid.singular_values.begin() + r);
  } else {
    DenseMatrix phi(state.dim, r + 1);
    for (int col = 0; col < r + 1; ++col)
      for (int i = 0; i < state.dim; ++i) {
        double s = 0.0;
        for (int k = 0; k < r; ++k) s += state.phi(i, k) * mid.u(k, col);
        s += j[i] * mid.u(r, col);
        phi(i, col) = s;
      }
    state.phi = phi;
    state.singular_values = mid.singular_values;
  }
  state.psi = psi;
  ++state.update_count;
  repair_orthogonality(state);
}

void basis_update(BasisState& state, const Vector& snapshot)
{
  if (state.mode == BasisMode::QR)
    qr_update(state, snapshot);
  else
    svd_update(state, snapshot);
}

DenseMatrix pod_batch(const DenseMatrix& snapshots, int r)
{
  if (snapshots.cols < 1)
    throw std::invalid_argument("pod_batch: snapshot matrix is empty");
  if (snapshots.rows < snapshots.cols)
    throw std::invalid_argument("pod_batch: requires rows >= cols");
  if (r < 1) throw std::invalid_argument("pod_batch: r must be >= 1");

  const QrResult qr = thin_qr(snapshots);
  const SvdResult svd = dense_svd(qr.r);

  const double smax = svd.singular_values.empty() ? 0.0 : svd.singular_values[0];
  const double rank_tol = std::numeric_limits<double>::epsilon() *
                          std::max(snapshots.rows, snapshots.cols) * smax;
  int rank = 0;
  for (double s : svd.singular_values)
    if (s > rank_tol) ++rank;

  const int keep = std::min(r, rank);
  DenseMatrix phi(snapshots.rows, keep);
  for (int col = 0; col < keep; ++col) {
    for (int i = 0; i < snapshots.rows; ++i) {
      double s = 0.0;
      for (int k = 0; k < qr.q.cols; ++k) s += qr.q(i, k) * svd.u(k, col);
      phi(i, col) = s;
    }
  }
  return phi;
}

void save_basis(const BasisState& state, const std::string& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_basis: cannot open " + path);
  out.write(kMagic, 4);
  const std::uint32_t version = kVersion;
  const std::uint64_t dim = static_cast<std::uint64_t>(state.dim);
  const std::uint64_t rank = static_cast<std::uint64_t>(state.rank());
  const std::uint32_t mode = state.mode == BasisMode::QR ? 0u : 1u;
  out.write(reinterpret_cast<const char*>(&version), sizeof version);
  out.write(reinterpret_cast<const char*>(&dim), sizeof dim);
  out.write(reinterpret_cast<const char*>(&rank), sizeof rank);
  out.write(reinterpret_cast<const char*>(&mode), sizeof mode);
  out.write(reinterpret_cast<const char*>(state.phi.values.data()),
            static_cast<std::streamsize>(state.phi.values.size() * sizeof(double)));
  if (state.mode == BasisMode::SVD)
    out.write(reinterpret_cast<const char*>(state.singular_values.data()),
              static_cast<std::streamsize>(state.singular_values.size() * sizeof(double)));
  if (!out) throw std::runtime_error("save_basis: write failed for " + path);
}

BasisState load_basis(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_basis: cannot open " + path);
  char magic[4];
  std::uint32_t version = 0, mode = 0;
  std::uint64_t dim = 0, rank = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  in.read(reinterpret_cast<char*>(&dim), sizeof dim);
  in.read(reinterpret_cast<char*>(&rank), sizeof rank);
  in.read(reinterpret_cast<char*>(&mode), sizeof mode);
  if (!in || std::memcmp(magic, kMagic, 4) != 0 || version != kVersion)
    throw std::runtime_error("load_basis: bad header in " + path);

  BasisState state;
  state.mode = mode == 0 ? BasisMode::QR : BasisMode::SVD;
  state.dim = static_cast<int>(dim);
  state.phi = DenseMatrix(state.dim, static_cast<int>(rank));
  in.read(reinterpret_cast<char*>(state.phi.values.data()),
          static_cast<std::streamsize>(state.phi.values.size() * sizeof(double)));
  if (state.mode == BasisMode::SVD) {
    state.singular_values.assign(rank, 0.0);
    in.read(reinterpret_cast<char*>(state.singular_values.data()),
            static_cast<std::streamsize>(rank * sizeof(double)));
    // right factors are not persisted; accumulation restarts fresh
    state.psi = DenseMatrix::identity(static_cast<int>(rank));
  }
  if (!in) throw std::runtime_error("load_basis: truncated file " + path);
  state.update_count = static_cast<long>(rank);
  return state;
}

}  // namespace romtopt
