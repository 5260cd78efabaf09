#ifndef ROMTOPT_PCG_HPP
#define ROMTOPT_PCG_HPP

#include <functional>

#include "romtopt/csr.hpp"
#include "romtopt/dense.hpp"
#include "romtopt/preconditioner.hpp"

namespace romtopt {

// Convergence threshold policy tied to the optimizer's KKT norm. Option 1
// clamps kappa*r_kkt into [lower, upper]; option 2 switches to a fixed user
// tolerance once r_kkt drops below a cut value.
struct PcgThresholds {
  enum class Option { ClampedRange, CutValue };
  Option option = Option::CutValue;
  double kappa_pcg = 1e-2;
  double lower = 1e-8;      // ClampedRange
  double upper = 1e-3;      // ClampedRange
  double kappa_cut = 1e-3;  // CutValue
  double eps_floor = 1e-4;  // CutValue user tolerance
};

double pcg_threshold(const PcgThresholds& t, double r_kkt);

struct PcgSettings {
  double eps = 1e-4;      // relative tolerance
  double tol_abs = 0.0;   // absolute tolerance
  int max_iterations = 20000;
  // Records max ||Phi^T A p|| / (||A||_F ||p||) over iterations when set.
  bool track_deflation = false;
  // Test hook, called with (iteration, current iterate) when set.
  std::function<void(int, const Vector&)> on_iterate;
};

enum class PcgStatus { Converged, MaxIterations, NotPositiveDefinite };

struct PcgReport {
  Vector x;
  int iterations = 0;
  PcgStatus status = PcgStatus::Converged;
  double final_metric = 0.0;     // last r^T M^{-1} r
  double stop_threshold = 0.0;   // max(eps^2 b^T M^{-1} b, tol_abs^2)
  bool recycled = false;         // deflation space was active
  bool deflation_skipped = false;  // reduced operator not SPD
  double max_deflation_ratio = 0.0;

  bool converged() const { return status == PcgStatus::Converged; }
};

// Preconditioned conjugate gradients. Stopping rule:
// r^T M^{-1} r <= max(eps^2 b^T M^{-1} b, tol_abs^2). An exact initial
// guess converges with zero iterations.
PcgReport pcg(const CsrMatrix& a, const Vector& b, const Vector& x0,
              const PcgSettings& settings, const Preconditioner& m);

// PCG with every search direction A-orthogonalized against range(phi),
// so the Krylov space augments the recycle space instead of revisiting it.
// phi must have orthonormal columns; with zero columns the iterates match
// pcg() bitwise. x0 is typically the reduced-model solution.
PcgReport recycling_pcg(const CsrMatrix& a, const Vector& b, const Vector& x0,
                        const PcgSettings& settings, const Preconditioner& m,
                        const DenseMatrix& phi);

}  // namespace romtopt

#endif
