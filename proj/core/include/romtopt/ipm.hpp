#ifndef ROMTOPT_IPM_HPP
#define ROMTOPT_IPM_HPP

#include <functional>
#include <string>

#include "romtopt/dense.hpp"

namespace romtopt {

// Nonlinear program seen by the interior-point solver:
//
//   minimize f(x)   s.t.  g_i(x) <= 0,  0 <= x_j  (x_j <= xu_j where finite)
//
// Slacks q = -g and upper gaps w = xu - x stack with x into the barrier
// variables. Only the inequality multipliers are kept explicitly; the
// multipliers of the upper-bound rows coincide with the upper-bound duals
// and are eliminated.
class NlpProblem {
public:
  virtual ~NlpProblem() = default;

  virtual int num_variables() const = 0;
  virtual int num_constraints() const = 0;
  virtual Vector initial_point() const = 0;
  // +infinity when the variable has no upper bound
  virtual double upper_bound(int j) const = 0;

  struct Values {
    double objective = 0.0;
    Vector constraints;
  };
  struct Gradients {
    Vector objective_gradient;         // n
    DenseMatrix constraint_gradients;  // n x m, column i = grad g_i
  };

  virtual Values evaluate(const Vector& x) = 0;
  // Called at the most recently evaluated point, so implementations may
  // reuse cached state solutions.
  virtual Gradients evaluate_gradients(const Vector& x) = 0;
};

struct IpmState {
  Vector x;        // n, strictly inside [0, xu]
  Vector q;        // m, strictly positive slacks
  Vector zx;       // n, lower-bound duals
  Vector zq;       // m, slack duals
  Vector zw;       // n, upper-bound duals (0 where unbounded)
  Vector lambda;   // m, inequality multipliers
  double omega = 0.1;  // barrier parameter
  int iteration = 0;
};

struct KktScalings {
  double s_d = 1.0;
  double s_c = 1.0;
  static constexpr double s_max = 100.0;
};

// Scaled max of stationarity, primal feasibility, and complementarity.
// omega = 0 gives the optimality error of the original problem; omega > 0
// the error of the barrier problem.
double kkt_norm(const IpmState& state, const NlpProblem::Gradients& grads,
                const Vector& constraint_values, const Vector& upper_bounds,
                double omega, KktScalings* scalings_out = nullptr);

// omega <- max(eps_tol/10, min(0.2 omega, omega^1.5))
double update_omega(double omega, double eps_tol);

struct IpmSettings {
  double eps_tol = 1e-6;
  double omega0 = 0.1;
  double tau = 0.995;          // fraction-to-boundary
  int max_iterations = 1000;
  int max_backtracks = 10;
  double armijo_c = 1e-4;
  double kappa_sigma = 1e10;   // dual safeguard width
  double bound_push = 0.01;    // initial interior margin
  // Called after every accepted step with diagnostics (tests, logging).
  struct StepInfo {
    int iteration;
    double alpha;
    double merit_before;
    double merit_after;
    double penalty;
    double omega;
  };
  std::function<void(const StepInfo&)> on_step;
};

enum class IpmStatus { Converged, IterationLimit, StepFailure };

struct IpmResult {
  IpmStatus status = IpmStatus::IterationLimit;
  IpmState state;
  double objective = 0.0;
  Vector constraints;
  double r_kkt = 0.0;
  int iterations = 0;
  std::string diagnostic;
};

// (iteration, f, max g, r_kkt, omega), called once per outer iteration
// before the step is taken.
using IpmObserver = std::function<void(int, double, double, double, double)>;

// Primal-dual interior-point method with a Barzilai-Borwein diagonal
// Hessian model on the x block and exact barrier curvature. Equality
// multipliers come from an m x m Schur-complement solve per step; steps
// are damped by the fraction-to-boundary rule and an l1 merit line search.
class InteriorPointSolver {
public:
  InteriorPointSolver(NlpProblem& problem, IpmSettings settings);

  // One damped Newton step on the barrier problem at the current omega.
  // Returns false when no acceptable step was found (see diagnostic()).
  bool step();

  // Full homotopy loop driving the omega = 0 KKT norm below eps_tol.
  IpmResult run(const IpmObserver& observer = {});

  const IpmState& state() const { return state_; }
  IpmState& mutable_state() { return state_; }
  double current_objective() const { return values_.objective; }
  const Vector& current_constraints() const { return values_.constraints; }
  double kkt_error(double omega, KktScalings* scalings = nullptr) const;
  const std::string& diagnostic() const { return diagnostic_; }

private:
  NlpProblem& problem_;
  IpmSettings settings_;
  IpmState state_;
  Vector upper_;       // n, +inf where unbounded
  NlpProblem::Values values_;
  NlpProblem::Gradients grads_;
  double bb_curvature_ = 1.0;
  double penalty_ = 1.0;
  std::string diagnostic_;

  double barrier_merit(double objective, const Vector& g, const Vector& x,
                       const Vector& q) const;
  void safeguard_duals();
};

}  // namespace romtopt

#endif
