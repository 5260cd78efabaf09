#include "romtopt/pcg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace romtopt {

double pcg_threshold(const PcgThresholds& t, double r_kkt)
{
  if (r_kkt < 0.0) throw std::invalid_argument("pcg_threshold: r_kkt must be >= 0");
  if (t.option == PcgThresholds::Option::ClampedRange)
    return std::min(std::max(t.kappa_pcg * r_kkt, t.lower), t.upper);
  if (r_kkt > t.kappa_cut) return std::max(t.kappa_pcg * r_kkt, t.eps_floor);
  return t.eps_floor;
}

namespace {

struct Deflation {
  const DenseMatrix* phi = nullptr;
  DenseMatrix a_phi;       // A * Phi
  CholeskyFactor reduced;  // chol(Phi^T A Phi)
  double a_frob = 0.0;

  bool active() const { return phi != nullptr; }

  // p -= Phi * ((Phi^T A Phi)^{-1} Phi^T A z)
  void project_out(const Vector& z, Vector& p) const
  {
    const Vector rhs = matvec_transposed(a_phi, z);
    const Vector y = reduced.solve(rhs);
    for (int j = 0; j < phi->cols; ++j) {
      const double yj = y[j];
      for (int i = 0; i < phi->rows; ++i) p[i] -= (*phi)(i, j) * yj;
    }
  }

  double ratio(const Vector& p) const
  {
    const Vector s = matvec_transposed(a_phi, p);
    const double pn = norm2(p);
    if (pn == 0.0 || a_frob == 0.0) return 0.0;
    return norm2(s) / (a_frob * pn);
  }
};

PcgReport pcg_impl(const CsrMatrix& a, const Vector& b, const Vector& x0,
                   const PcgSettings& settings, const Preconditioner& m,
                   const DenseMatrix* phi)
{
  if (static_cast<int>(b.size()) != a.n)
    throw std::invalid_argument("pcg: rhs dimension mismatch");
  if (!x0.empty() && static_cast<int>(x0.size()) != a.n)
    throw std::invalid_argument("pcg: x0 dimension mismatch");

  PcgReport report;

  Deflation defl;
  if (phi != nullptr && phi->cols > 0) {
    if (phi->rows != a.n)
      throw std::invalid_argument("recycling_pcg: basis dimension mismatch");
    defl.a_phi = DenseMatrix(a.n, phi->cols);
    Vector col(a.n), acol;
    for (int j = 0; j < phi->cols; ++j) {
      for (int i = 0; i < a.n; ++i) col[i] = (*phi)(i, j);
      spmv(a, col, acol);
      defl.a_phi.set_column(j, acol);
    }
    DenseMatrix g(phi->cols, phi->cols);
    for (int j = 0; j < phi->cols; ++j)
      for (int i = 0; i < phi->cols; ++i) {
        double s = 0.0;
        for (int k = 0; k < a.n; ++k) s += (*phi)(k, i) * defl.a_phi(k, j);
        g(i, j) = s;
      }
    for (int j = 0; j < phi->cols; ++j)
      for (int i = 0; i < j; ++i) {
        const double sym = 0.5 * (g(i, j) + g(j, i));
        g(i, j) = sym;
        g(j, i) = sym;
      }
    defl.reduced = cholesky(g);
    if (defl.reduced.ok) {
      defl.phi = phi;
      report.recycled = true;
      if (settings.track_deflation) defl.a_frob = a.frobenius_norm();
    } else {
      report.deflation_skipped = true;
    }
  }

  Vector x = x0.empty() ? Vector(a.n, 0.0) : x0;
  Vector r(a.n);
  if (x0.empty()) {
    r = b;
  } else {
    spmv(a, x, r);
    for (int i = 0; i < a.n; ++i) r[i] = b[i] - r[i];
  }

  Vector z = m.apply(r);
  Vector p = z;
  if (defl.active()) defl.project_out(z, p);

  const Vector mb = m.apply(b);
  const double stop = std::max(settings.eps * settings.eps * dot(b, mb),
                               settings.tol_abs * settings.tol_abs);
  report.stop_threshold = stop;

  double zeta = dot(r, p);
  if (zeta <= stop) {
    report.x = std::move(x);
    report.iterations = 0;
    report.status = PcgStatus::Converged;
    report.final_metric = zeta;
    return report;
  }

  Vector w(a.n);
  spmv(a, p, w);
  double gamma = dot(p, w);
  if (gamma <= 0.0) {
    report.x = std::move(x);
    report.status = PcgStatus::NotPositiveDefinite;
    report.final_metric = zeta;
    return report;
  }

  report.status = PcgStatus::MaxIterations;
  for (int j = 1; j <= settings.max_iterations; ++j) {
    const double alpha = zeta / gamma;
    axpy(alpha, p, x);
    axpy(-alpha, w, r);
    if (j % 50 == 0) {
      // refresh the residual recurrence to bound drift
      spmv(a, x, r);
      for (int i = 0; i < a.n; ++i) r[i] = b[i] - r[i];
    }
    if (settings.on_iterate) settings.on_iterate(j, x);

    m.apply(r, z);
    const double eta = dot(r, z);
    if (eta < stop) {
      report.iterations = j;
      report.status = PcgStatus::Converged;
      report.final_metric = eta;
      break;
    }
    const double beta = eta / zeta;
    for (int i = 0; i < a.n; ++i) p[i] = z[i] + beta * p[i];
    if (defl.active()) {
      defl.project_out(z, p);
      if (settings.track_deflation)
        report.max_deflation_ratio =
            std::max(report.max_deflation_ratio, defl.ratio(p));
    }
    spmv(a, p, w);
    gamma = dot(p, w);
    if (gamma <= 0.0) {
      report.iterations = j;
      report.status = PcgStatus::NotPositiveDefinite;
      report.final_metric = eta;
      break;
    }
    zeta = eta;
    report.iterations = j;
  }
  if (report.status == PcgStatus::MaxIterations)
    report.final_metric = zeta;
  report.x = std::move(x);
  return report;
}

}  // namespace

PcgReport pcg(const CsrMatrix& a, const Vector& b, const Vector& x0,
              const PcgSettings& settings, const Preconditioner& m)
{
  return pcg_impl(a, b, x0, settings, m, nullptr);
}

PcgReport recycling_pcg(const CsrMatrix& a, const Vector& b, const Vector& x0,
                        const PcgSettings& settings, const Preconditioner& m,
                        const DenseMatrix& phi)
{
  return pcg_impl(a, b, x0, settings, m, &phi);
}

}  // namespace romtopt
