// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_PATH_HPP_
#define DDIPM_PATH_HPP_

#include <array>
#include <memory>
#include <optional>

#include <Eigen/Core>

#include "ddipm/problem.hpp"

namespace ddipm {

// Certified two-sided bound on <c,x> + delta*(y/tau | D), the duality gap of
// the returned primal-dual pair.
struct GapBounds {
  double lower = 0.0;
  double upper = 0.0;
  double kappa = 0.0;  // local-norm distance between u and the conjugate point
};

// Membership diagnostics for the infeasible-start working set: tau > 0,
// A x + z0/tau strictly interior, y in the dual interior, and the linear
// dual-feasibility equation A'y = A'y0 - (tau - 1) c within rounding.
struct QddResiduals {
  double dual_residual = 0.0;  // |A'(y - y0) + (tau-1) c|_inf
  double dual_scale = 1.0;
  double primal_margin = 0.0;  // smallest block interior margin of u
  double tau = 0.0;
  bool tau_positive = false;
  bool primal_interior = false;
  bool dual_interior = false;

  bool ok() const {
    return tau_positive && primal_interior && dual_interior &&
           dual_residual <= 1e-8 * dual_scale;
  }
};

// One point of the working set with every derived quantity the algorithm
// consumes: u = A x + z0/tau, the parameter mu, the proximity omega, the
// conjugate solve at tau y / mu (also the warm start for the next point),
// the barrier gradient/Hessian at u, and certified gap bounds.  Immutable.
class Iterate {
 public:
  // Throws DomainError / DualInteriorError / NumericalError when the point
  // is outside the working domain; try_make returns nullopt instead.
  static Iterate make(const DomainDrivenProblem& problem, Eigen::VectorXd x,
                      double tau, Eigen::VectorXd y, double xi,
                      const std::optional<Eigen::VectorXd>& conj_warm = {});
  static std::optional<Iterate> try_make(
      const DomainDrivenProblem& problem, Eigen::VectorXd x, double tau,
      Eigen::VectorXd y, double xi,
      const std::optional<Eigen::VectorXd>& conj_warm = {});

  const DomainDrivenProblem& problem() const { return *problem_; }
  const Eigen::VectorXd& x() const { return x_; }
  double tau() const { return tau_; }
  const Eigen::VectorXd& y() const { return y_; }
  const Eigen::VectorXd& u() const { return u_; }
  double xi() const { return xi_; }
  double mu() const { return mu_; }
  double omega() const { return omega_; }
  double objective() const { return cx_; }

  const Eigen::VectorXd& y0() const { return y0_; }
  double y_tau0() const { return ytau0_; }
  // Conjugate maximizer at w = tau y / mu; the gradient of Phi* there.
  const Eigen::VectorXd& conj_point() const { return conj_u_star_; }
  double conj_value() const { return conj_value_; }
  const Eigen::VectorXd& grad_u() const { return grad_u_; }
  const BlockHessian& hess_u() const { return *hess_u_; }
  std::shared_ptr<const BlockHessian> hess_u_ptr() const { return hess_u_; }

  // Local-norm residual r = |tau y / mu - Phi'(u)| in the inverse Hessian
  // norm at u; rho(r) <= omega <= rho(-r).
  double prox_residual() const;

  GapBounds gap() const { return gap_; }
  QddResiduals residuals() const;

 private:
  Iterate() = default;

  const DomainDrivenProblem* problem_ = nullptr;
  Eigen::VectorXd x_, y_, u_, y0_, grad_u_, conj_u_star_;
  double tau_ = 0.0, xi_ = 0.0, mu_ = 0.0, omega_ = 0.0;
  double ytau0_ = 0.0, conj_value_ = 0.0, cx_ = 0.0;
  std::shared_ptr<const BlockHessian> hess_u_;
  GapBounds gap_;
};

// mu evaluated by the tau-linear expression
//   -(1/(xi theta)) [ <y, z0> + tau (y_tau0 + <c,x> + <y0, A x>) ].
double mu_of(const DomainDrivenProblem& problem, const Eigen::VectorXd& x,
             double tau, const Eigen::VectorXd& y, double xi);

// The same quantity in its three algebraic forms (direct, tau-quadratic,
// tau-linear); they agree on working-set points and the tests pin that.
std::array<double, 3> mu_forms(const DomainDrivenProblem& problem,
                               const Eigen::VectorXd& x, double tau,
                               const Eigen::VectorXd& y, double xi);

// Two-sided support function estimate from one conjugate solve:
//   <Phi*'(k y), y>  in  [delta*(y|D) - theta/k, delta*(y|D)],
// returned as {lower, upper} = {<Phi*'(k y), y>, same + theta/k}.
// Requires k > 0 and k y in the dual interior.
std::pair<double, double> support_estimate(
    const DomainDrivenProblem& problem, const Eigen::VectorXd& y, double k,
    const std::optional<Eigen::VectorXd>& warm = {});

// The augmented-space Hessian
//   Hbar = [ Phi''(u)/tau^2                  , -(Phi''(u) u + Phi'(u))/tau^2 ;
//            symmetric                       , zeta ],
//   zeta = (2 <Phi'(u), u> + <u, Phi''(u) u> + xi theta) / tau^2,
// applied and inverted through the factored block Hessian plus a rank-one
// correction; never assembled densely in the solver (dense() is for tests).
class BarHessian {
 public:
  explicit BarHessian(const Iterate& it);

  int dim() const { return m_ + 1; }  // acts on (d, d_tau) of size m+1

  std::pair<Eigen::VectorXd, double> apply(const Eigen::VectorXd& d,
                                           double d_tau) const;
  std::pair<Eigen::VectorXd, double> inv_apply(const Eigen::VectorXd& w,
                                               double w_tau) const;
  Eigen::MatrixXd apply_matrix(const Eigen::MatrixXd& m) const;      // columns
  Eigen::MatrixXd inv_apply_matrix(const Eigen::MatrixXd& m) const;  // columns

  double quad(const Eigen::VectorXd& d, double d_tau) const;
  // Same value through the expanded form
  //   |d/tau - (d_tau/tau) u|_{Phi''}^2
  //   - 2 (d_tau/tau) <d/tau - (d_tau/tau) u, Phi'> + xi theta d_tau^2/tau^2.
  double quad_expanded(const Eigen::VectorXd& d, double d_tau) const;
  double inv_quad(const Eigen::VectorXd& w, double w_tau) const;

  Eigen::MatrixXd dense() const;

  double zeta() const { return zeta_; }
  double eta() const { return eta_; }
  const Eigen::VectorXd& h() const { return h_; }
  // g = Hinv h = -u - Phi''(u)^{-1} Phi'(u); the rank-one direction of the
  // structured inverse.
  const Eigen::VectorXd& rank_one_dir() const { return g_; }

 private:
  int m_ = 0;
  double tau_ = 0.0, xitheta_ = 0.0, zeta_ = 0.0, eta_ = 0.0;
  Eigen::VectorXd u_, grad_, h_, g_;
  std::shared_ptr<const BlockHessian> bh_;
};

// Certified bounds of the duality gap at the iterate (already cached there);
// exposed as a free function for direct use.
GapBounds duality_gap_bounds(const Iterate& it);

QddResiduals qdd_residuals(const Iterate& it);

}  // namespace ddipm

#endif  // DDIPM_PATH_HPP_
