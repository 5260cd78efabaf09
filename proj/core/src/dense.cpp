#include "romtopt/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace romtopt {

DenseMatrix DenseMatrix::identity(int n)
{
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector DenseMatrix::column(int j) const
{
  Vector v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

void DenseMatrix::set_column(int j, const Vector& v)
{
  for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

Vector matvec(const DenseMatrix& A, const Vector& x)
{
  if (static_cast<int>(x.size()) != A.cols)
    throw std::invalid_argument("matvec: dimension mismatch");
  Vector y(A.rows, 0.0);
  for (int j = 0; j < A.cols; ++j) {
    const double xj = x[j];
    for (int i = 0; i < A.rows; ++i) y[i] += A(i, j) * xj;
  }
  return y;
}

Vector matvec_transposed(const DenseMatrix& A, const Vector& x)
{
  if (static_cast<int>(x.size()) != A.rows)
    throw std::invalid_argument("matvec_transposed: dimension mismatch");
  Vector y(A.cols, 0.0);
  for (int j = 0; j < A.cols; ++j) {
    double s = 0.0;
    for (int i = 0; i < A.rows; ++i) s += A(i, j) * x[i];
    y[j] = s;
  }
  return y;
}

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B)
{
  if (A.cols != B.rows)
    throw std::invalid_argument("matmul: dimension mismatch");
  DenseMatrix C(A.rows, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    for (int k = 0; k < A.cols; ++k) {
      const double bkj = B(k, j);
      if (bkj == 0.0) continue;
      for (int i = 0; i < A.rows; ++i) C(i, j) += A(i, k) * bkj;
    }
  }
  return C;
}

SvdResult dense_svd(const DenseMatrix& q)
{
  if (q.rows != q.cols)
    throw std::invalid_argument("dense_svd: matrix must be square");
  const int n = q.rows;

  DenseMatrix g = q;  // columns rotated toward mutual orthogonality
  DenseMatrix v = DenseMatrix::identity(n);

  const double eps = std::numeric_limits<double>::epsilon();
  const int max_sweeps = 64;
  bool converged = (n <= 1);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        double app = 0.0, arr = 0.0, apr = 0.0;
        for (int i = 0; i < n; ++i) {
          app += g(i, p) * g(i, p);
          arr += g(i, r) * g(i, r);
          apr += g(i, p) * g(i, r);
        }
        if (std::abs(apr) <= 10.0 * eps * std::sqrt(app * arr)) continue;
        converged = false;
        const double zeta = (arr - app) / (2.0 * apr);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (int i = 0; i < n; ++i) {
          const double gp = g(i, p), gr = g(i, r);
          g(i, p) = cs * gp - sn * gr;
          g(i, r) = sn * gp + cs * gr;
        }
        for (int i = 0; i < n; ++i) {
          const double vp = v(i, p), vr = v(i, r);
          v(i, p) = cs * vp - sn * vr;
          v(i, r) = sn * vp + cs * vr;
        }
      }
    }
  }
  if (!converged)
    throw std::runtime_error("dense_svd: Jacobi sweeps did not converge");

  SvdResult out;
  out.u = DenseMatrix(n, n);
  out.v = DenseMatrix(n, n);
  out.singular_values.assign(n, 0.0);

  Vector sigma(n);
  double smax = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += g(i, j) * g(i, j);
    sigma[j] = std::sqrt(s);
    smax = std::max(smax, sigma[j]);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sigma[a] > sigma[b]; });

  const double null_tol = static_cast<double>(n) * eps * smax;
  int num_kept = 0;
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.singular_values[j] = sigma[src];
    for (int i = 0; i < n; ++i) out.v(i, j) = v(i, src);
    if (sigma[src] > null_tol && sigma[src] > 0.0) {
      for (int i = 0; i < n; ++i) out.u(i, j) = g(i, src) / sigma[src];
      num_kept = j + 1;
    }
  }

  // Left vectors of (numerically) zero singular values: complete to an
  // orthonormal basis from coordinate vectors.
  for (int j = num_kept; j < n; ++j) {
    Vector cand(n, 0.0);
    double best = -1.0;
    for (int e = 0; e < n; ++e) {
      Vector w(n, 0.0);
      w[e] = 1.0;
      for (int k = 0; k < j; ++k) {
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += out.u(i, k) * w[i];
        for (int i = 0; i < n; ++i) w[i] -= proj * out.u(i, k);
      }
      const double nw = norm2(w);
      if (nw > best) {
        best = nw;
        cand = w;
      }
    }
    if (best <= 0.0)
      throw std::runtime_error("dense_svd: failed to complete left basis");
    // one re-orthogonalization pass
    for (int k = 0; k < j; ++k) {
      double proj = 0.0;
      for (int i = 0; i < n; ++i) proj += out.u(i, k) * cand[i];
      for (int i = 0; i < n; ++i) cand[i] -= proj * out.u(i, k);
    }
    scale(1.0 / norm2(cand), cand);
    out.u.set_column(j, cand);
  }
  return out;
}

QrResult thin_qr(const DenseMatrix& b, double rank_tol)
{
  const int m = b.rows, n = b.cols;
  if (m < n)
    throw std::invalid_argument("thin_qr: requires rows >= cols");

  DenseMatrix a = b;  // becomes R in the upper triangle
  std::vector<Vector> reflectors;
  reflectors.reserve(n);

  for (int k = 0; k < n; ++k) {
    double xnorm = 0.0;
    for (int i = k; i < m; ++i) xnorm += a(i, k) * a(i, k);
    xnorm = std::sqrt(xnorm);

    Vector h(m - k, 0.0);
    if (xnorm > 0.0) {
      const double alpha = (a(k, k) >= 0.0) ? -xnorm : xnorm;
      for (int i = k; i < m; ++i) h[i - k] = a(i, k);
      h[0] -= alpha;
      const double hn = norm2(h);
      if (hn > 0.0) {
        scale(1.0 / hn, h);
        for (int j = k; j < n; ++j) {
          double s = 0.0;
          for (int i = k; i < m; ++i) s += h[i - k] * a(i, j);
          for (int i = k; i < m; ++i) a(i, j) -= 2.0 * s * h[i - k];
        }
      }
    }
    reflectors.push_back(std::move(h));
  }

  QrResult out;
  out.r = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) out.r(i, j) = a(i, j);

  // Accumulate the thin Q by applying reflectors to the leading identity.
  out.q = DenseMatrix(m, n);
  for (int j = 0; j < n; ++j) {
    Vector e(m, 0.0);
    e[j] = 1.0;
    for (int k = n - 1; k >= 0; --k) {
      const Vector& h = reflectors[k];
      if (h.empty()) continue;
      double s = 0.0;
      for (int i = k; i < m; ++i) s += h[i - k] * e[i];
      for (int i = k; i < m; ++i) e[i] -= 2.0 * s * h[i - k];
    }
    out.q.set_column(j, e);
  }

  // Fix signs so diag(R) >= 0.
  for (int k = 0; k < n; ++k) {
    if (out.r(k, k) < 0.0) {
      for (int j = k; j < n; ++j) out.r(k, j) = -out.r(k, j);
      for (int i = 0; i < m; ++i) out.q(i, k) = -out.q(i, k);
    }
  }

  double rmax = 0.0;
  for (int k = 0; k < n; ++k) rmax = std::max(rmax, std::abs(out.r(k, k)));
  for (int k = 0; k < n; ++k)
    if (std::abs(out.r(k, k)) < rank_tol * std::max(1.0, rmax))
      out.deficient_columns.push_back(k);
  return out;
}

CholeskyFactor cholesky(const DenseMatrix& a)
{
  CholeskyFactor f;
  if (a.rows != a.cols) return f;
  const int n = a.rows;
  f.l = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= f.l(j, k) * f.l(j, k);
    if (!(d > 0.0)) return f;  // not positive definite
    f.l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= f.l(i, k) * f.l(j, k);
      f.l(i, j) = s / f.l(j, j);
    }
  }
  f.ok = true;
  return f;
}

Vector CholeskyFactor::solve(const Vector& rhs) const
{
  if (!ok) throw std::runtime_error("CholeskyFactor::solve: factor invalid");
  const int n = l.rows;
  if (static_cast<int>(rhs.size()) != n)
    throw std::invalid_argument("CholeskyFactor::solve: dimension mismatch");
  Vector y(rhs);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) y[i] -= l(i, k) * y[k];
    y[i] /= l(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) y[i] -= l(k, i) * y[k];
    y[i] /= l(i, i);
  }
  return y;
}

}  // namespace romtopt
