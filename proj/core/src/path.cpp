// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/path.hpp"

#include <cmath>
#include <utility>

#include "ddipm/errors.hpp"

namespace ddipm {

namespace {

// y0 = Phi'(z0) and y_tau0 = -<y0, z0> - xi theta; the anchors of the
// infeasible-start path.
std::pair<Eigen::VectorXd, double> initial_dual(
    const DomainDrivenProblem& problem, double xi) {
  const Eigen::VectorXd y0 = problem.barrier().gradient(problem.z0());
  const double ytau0 = -y0.dot(problem.z0()) - xi * problem.barrier().theta();
  return {y0, ytau0};
}

}  // namespace

double mu_of(const DomainDrivenProblem& problem, const Eigen::VectorXd& x,
             double tau, const Eigen::VectorXd& y, double xi) {
  const auto [y0, ytau0] = initial_dual(problem, xi);
  const double xitheta = xi * problem.barrier().theta();
  const Eigen::VectorXd ax = problem.a() * x;
  // Grouping <c,x> + <y0,Ax> first: the two cancel exactly on the path.
  const double s = (problem.c().dot(x) + y0.dot(ax)) + ytau0;
  return -(y.dot(problem.z0()) + tau * s) / xitheta;
}

std::array<double, 3> mu_forms(const DomainDrivenProblem& problem,
                               const Eigen::VectorXd& x, double tau,
                               const Eigen::VectorXd& y, double xi) {
  const auto [y0, ytau0] = initial_dual(problem, xi);
  const double xitheta = xi * problem.barrier().theta();
  const Eigen::VectorXd ax = problem.a() * x;
  const double cx = problem.c().dot(x);
  const double y_tau = ytau0 + tau * cx;
  const Eigen::VectorXd u = ax + problem.z0() / tau;
  const double direct = -(tau * y.dot(u) + tau * y_tau) / xitheta;
  const double quadratic =
      -(y.dot(problem.z0()) + tau * y.dot(ax) + tau * ytau0 + tau * tau * cx) /
      xitheta;
  const double linear = mu_of(problem, x, tau, y, xi);
  return {direct, quadratic, linear};
}

std::pair<double, double> support_estimate(
    const DomainDrivenProblem& problem, const Eigen::VectorXd& y, double k,
    const std::optional<Eigen::VectorXd>& warm) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ValidationError("support estimate requires a finite k > 0");
  }
  const ConjugateResult conj = problem.barrier().conjugate(k * y, warm);
  const double lower = conj.u_star.dot(y);
  return {lower, lower + problem.barrier().theta() / k};
}

Iterate Iterate::make(const DomainDrivenProblem& problem, Eigen::VectorXd x,
                      double tau, Eigen::VectorXd y, double xi,
                      const std::optional<Eigen::VectorXd>& conj_warm) {
  const auto& barrier = problem.barrier();
  const Eigen::Index m = problem.a().rows();
  const Eigen::Index n = problem.a().cols();
  if (x.size() != n || y.size() != m) {
    throw ValidationError("iterate dimensions disagree with the problem");
  }
  if (!(xi > 1.0)) {
    throw ValidationError("the path parameter xi must exceed 1");
  }
  if (!std::isfinite(tau) || !(tau > 0.0)) {
    throw DomainError("tau must be positive");
  }

  Iterate it;
  it.problem_ = &problem;
  it.tau_ = tau;
  it.xi_ = xi;
  it.u_ = problem.a() * x + problem.z0() / tau;
  if (!it.u_.allFinite() || !barrier.contains(it.u_)) {
    throw DomainError("the point leaves the primal domain",
                      barrier.worst_margin_block(it.u_));
  }
  std::tie(it.y0_, it.ytau0_) = initial_dual(problem, xi);
  it.cx_ = problem.c().dot(x);
  it.mu_ = mu_of(problem, x, tau, y, xi);
  if (!std::isfinite(it.mu_) || !(it.mu_ > 0.0)) {
    throw DomainError("the path parameter mu is not positive here");
  }

  const Eigen::VectorXd w = (tau / it.mu_) * y;
  const ConjugateResult conj = barrier.conjugate(w, conj_warm);
  it.conj_u_star_ = conj.u_star;
  it.conj_value_ = conj.value;

  it.grad_u_ = barrier.gradient(it.u_);
  it.hess_u_ = std::make_shared<BlockHessian>(barrier, it.u_);

  it.omega_ = barrier.conjugate_pair_gap(it.u_, w, conj.u_star);
  if (!std::isfinite(it.omega_)) {
    throw DomainError("proximity is not finite at this point");
  }

  const double theta = barrier.theta();
  const Eigen::VectorXd diff = it.u_ - conj.u_star;
  const double kappa2 = barrier.hessian_quad(conj.u_star, diff);
  const double kappa = std::sqrt(std::max(0.0, kappa2));
  const double base = -it.ytau0_ / tau;
  const double spread = it.mu_ * kappa * std::sqrt(theta) / (tau * tau);
  it.gap_.kappa = kappa;
  it.gap_.lower = base - (xi * it.mu_ * theta) / (tau * tau) - spread;
  it.gap_.upper = base - ((xi - 1.0) * it.mu_ * theta) / (tau * tau) + spread;

  it.x_ = std::move(x);
  it.y_ = std::move(y);
  return it;
}

std::optional<Iterate> Iterate::try_make(
    const DomainDrivenProblem& problem, Eigen::VectorXd x, double tau,
    Eigen::VectorXd y, double xi,
    const std::optional<Eigen::VectorXd>& conj_warm) {
  try {
    return make(problem, std::move(x), tau, std::move(y), xi, conj_warm);
  } catch (const DomainError&) {
    return std::nullopt;
  } catch (const DualInteriorError&) {
    return std::nullopt;
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

double Iterate::prox_residual() const {
  const Eigen::VectorXd w = (tau_ / mu_) * y_;
  const double r2 = hess_u_->inv_quad(w - grad_u_);
  return std::sqrt(std::max(0.0, r2));
}

QddResiduals Iterate::residuals() const {
  QddResiduals r;
  r.tau = tau_;
  r.tau_positive = tau_ > 0.0;
  r.primal_margin = problem_->barrier().interior_margin(u_);
  r.primal_interior = r.primal_margin > 0.0;
  r.dual_interior = true;  // the conjugate solve at construction certified it
  const Eigen::VectorXd aty0 = problem_->a().transpose() * y0_;
  r.dual_residual = (problem_->a().transpose() * (y_ - y0_) +
                     (tau_ - 1.0) * problem_->c())
                        .lpNorm<Eigen::Infinity>();
  r.dual_scale = 1.0 + aty0.lpNorm<Eigen::Infinity>() +
                 (1.0 + tau_) * problem_->c().lpNorm<Eigen::Infinity>();
  return r;
}

GapBounds duality_gap_bounds(const Iterate& it) { return it.gap(); }

QddResiduals qdd_residuals(const Iterate& it) { return it.residuals(); }

BarHessian::BarHessian(const Iterate& it)
    : m_(static_cast<int>(it.u().size())),
      tau_(it.tau()),
      xitheta_(it.xi() * it.problem().barrier().theta()),
      u_(it.u()),
      grad_(it.grad_u()),
      bh_(it.hess_u_ptr()) {
  const Eigen::VectorXd hinv_grad = bh_->solve(grad_);
  g_ = -u_ - hinv_grad;
  const double denom = xitheta_ - grad_.dot(hinv_grad);
  if (!(denom > 0.0) || !std::isfinite(denom)) {
    throw NumericalError("augmented Hessian lost positive definiteness");
  }
  eta_ = tau_ * tau_ / denom;
  const Eigen::VectorXd hu = bh_->apply(u_);
  h_ = -(hu + grad_) / (tau_ * tau_);
  zeta_ = (2.0 * grad_.dot(u_) + u_.dot(hu) + xitheta_) / (tau_ * tau_);
}

std::pair<Eigen::VectorXd, double> BarHessian::apply(const Eigen::VectorXd& d,
                                                     double d_tau) const {
  Eigen::VectorXd top = bh_->apply(d) / (tau_ * tau_) + d_tau * h_;
  const double bottom = h_.dot(d) + zeta_ * d_tau;
  return {std::move(top), bottom};
}

std::pair<Eigen::VectorXd, double> BarHessian::inv_apply(
    const Eigen::VectorXd& w, double w_tau) const {
  const double s = g_.dot(w) - w_tau;
  Eigen::VectorXd top = tau_ * tau_ * bh_->solve(w) + (eta_ * s) * g_;
  return {std::move(top), -eta_ * s};
}

Eigen::MatrixXd BarHessian::apply_matrix(const Eigen::MatrixXd& m) const {
  const Eigen::MatrixXd d = m.topRows(m_);
  const Eigen::RowVectorXd t = m.row(m_);
  Eigen::MatrixXd out(m_ + 1, m.cols());
  out.topRows(m_) = bh_->apply(d) / (tau_ * tau_) + h_ * t;
  out.row(m_) = h_.transpose() * d + zeta_ * t;
  return out;
}

Eigen::MatrixXd BarHessian::inv_apply_matrix(const Eigen::MatrixXd& m) const {
  const Eigen::MatrixXd w = m.topRows(m_);
  const Eigen::RowVectorXd wt = m.row(m_);
  const Eigen::RowVectorXd s = g_.transpose() * w - wt;
  Eigen::MatrixXd out(m_ + 1, m.cols());
  out.topRows(m_) = tau_ * tau_ * bh_->solve(w) + g_ * (eta_ * s);
  out.row(m_) = -eta_ * s;
  return out;
}

double BarHessian::quad(const Eigen::VectorXd& d, double d_tau) const {
  return d.dot(bh_->apply(d)) / (tau_ * tau_) + 2.0 * d_tau * h_.dot(d) +
         zeta_ * d_tau * d_tau;
}

double BarHessian::quad_expanded(const Eigen::VectorXd& d,
                                 double d_tau) const {
  const double r = d_tau / tau_;
  const Eigen::VectorXd v = d / tau_ - r * u_;
  return bh_->quad(v) - 2.0 * r * v.dot(grad_) + xitheta_ * r * r;
}

double BarHessian::inv_quad(const Eigen::VectorXd& w, double w_tau) const {
  const double s = g_.dot(w) - w_tau;
  return tau_ * tau_ * bh_->inv_quad(w) + eta_ * s * s;
}

Eigen::MatrixXd BarHessian::dense() const {
  Eigen::MatrixXd out =
      apply_matrix(Eigen::MatrixXd::Identity(m_ + 1, m_ + 1));
  return 0.5 * (out + out.transpose());
}

}  // namespace ddipm
