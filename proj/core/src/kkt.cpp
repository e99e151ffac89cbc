// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/kkt.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/QR>

#include "ddipm/errors.hpp"

namespace ddipm {

Eigen::MatrixXd nullspace_basis(const Eigen::MatrixXd& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (m < n) {
    throw ValidationError("nullspace basis needs at least as many rows "
                          "as columns");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < n) {
    throw ValidationError("constraint matrix is column rank deficient");
  }
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
  return q.rightCols(m - n).transpose();
}

Eigen::MatrixXd KktContext::u_dense() const {
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(2 * m + 2, m + 1);
  u.topRows(m + 1) = u1;
  u.bottomRows(m + 1) = u2;
  return u;
}

KktContext assemble_kkt(const DomainDrivenProblem& problem, double xi) {
  KktContext ctx;
  ctx.problem = &problem;
  ctx.xi = xi;
  ctx.m = static_cast<int>(problem.a().rows());
  ctx.n = static_cast<int>(problem.a().cols());
  const int m = ctx.m;
  const int n = ctx.n;
  const auto& a = problem.a();
  const auto& c = problem.c();
  const auto& z0 = problem.z0();

  ctx.y0 = problem.barrier().gradient(z0);
  ctx.ytau0 = -ctx.y0.dot(z0) - xi * problem.barrier().theta();

  ctx.f = nullspace_basis(a);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a.transpose());
  ctx.c_a = cod.solve(c);

  ctx.r0.resize(m + 1);
  ctx.r0.head(n) = -a.transpose() * ctx.y0 - c;
  ctx.r0(n) = -ctx.ytau0 + ctx.c_a.dot(z0);
  ctx.r0.tail(m - n) = ctx.f * z0;

  ctx.u1 = Eigen::MatrixXd::Zero(m + 1, m + 1);
  ctx.u1.topLeftCorner(m, n) = a;
  ctx.u1(m, n) = 1.0;

  ctx.u2 = Eigen::MatrixXd::Zero(m + 1, m + 1);
  ctx.u2.block(0, n, m, 1) = -ctx.c_a;
  ctx.u2.topRightCorner(m, m - n) = -ctx.f.transpose();
  ctx.u2.row(m).head(n) = c.transpose();
  return ctx;
}

KktSystem::KktSystem(const KktContext& ctx, const BarHessian& hbar, double mu)
    : ctx_(&ctx) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw NumericalError("the Newton system needs a positive mu");
  }
  s_ = ctx.u1.transpose() * hbar.apply_matrix(ctx.u1) +
       (1.0 / (mu * mu)) * ctx.u2.transpose() * hbar.inv_apply_matrix(ctx.u2);
  s_ = 0.5 * (s_ + s_.transpose()).eval();

  const double trace = s_.trace();
  if (!std::isfinite(trace) || !(trace > 0.0) ||
      (s_.diagonal().array() <= 0.0).any()) {
    throw NumericalError("the Newton matrix is not positive definite");
  }
  // Factor D S D with D = diag(S)^{-1/2} instead of S itself: a large tau
  // spreads the row scales of S apart and the equilibrated factorization
  // keeps its accuracy where the raw one degrades.  Scaling, factorization
  // and solves all run in extended precision so the assembled entries of S
  // stay the only double rounding in the chain.
  const MatrixXld sld = s_.cast<long double>();
  scale_ = sld.diagonal().array().rsqrt();
  MatrixXld scaled = scale_.asDiagonal() * sld * scale_.asDiagonal();
  scaled = (0.5L * (scaled + scaled.transpose())).eval();
  s_eff_ = scaled;
  llt_.compute(s_eff_);
  long double shift = 1e-12L * scaled.trace();
  int tries = 0;
  while (llt_.info() != Eigen::Success && tries < 3) {
    shift_ = static_cast<double>(shift);
    s_eff_ = scaled + shift * MatrixXld::Identity(s_.rows(), s_.cols());
    llt_.compute(s_eff_);
    shift *= 10.0L;
    ++tries;
  }
  if (llt_.info() != Eigen::Success) {
    throw NumericalError("Newton matrix factorization failed even with a "
                         "diagonal shift of " + std::to_string(shift_));
  }
}

Eigen::VectorXd KktSystem::solve(const Eigen::VectorXd& rhs) const {
  const VectorXld rhs_ld = rhs.cast<long double>();
  const VectorXld rhs_s = scale_.asDiagonal() * rhs_ld;
  VectorXld d = llt_.solve(rhs_s);
  const long double target = 1e-9L * rhs_s.norm();
  for (int pass = 0; pass < 2; ++pass) {
    const VectorXld res = rhs_s - s_eff_ * d;
    if (res.norm() <= target) break;
    d += llt_.solve(res);
  }
  return (scale_.asDiagonal() * d).cast<double>();
}

Direction KktSystem::direction(const Eigen::VectorXd& rhs,
                               const Eigen::VectorXd& x) const {
  return split(solve(rhs), x);
}

Direction KktSystem::split(const Eigen::VectorXd& d,
                           const Eigen::VectorXd& x) const {
  const int m = ctx_->m;
  const int n = ctx_->n;
  Direction dir;
  dir.d = d;
  dir.d_xbar = dir.d.head(n);
  dir.d_tau = dir.d(n);
  dir.d_v = dir.d.tail(m - n);
  dir.d_x = dir.d_xbar - dir.d_tau * x;
  dir.d_y = -dir.d_tau * ctx_->c_a - ctx_->f.transpose() * dir.d_v;
  return dir;
}

Eigen::VectorXd predictor_rhs(const KktContext& ctx, double mu) {
  return ctx.r0 / (mu * mu);
}

Eigen::VectorXd psi_predictor(const KktContext& ctx, const Iterate& it) {
  const int m = ctx.m;
  const double tau = it.tau();
  const double mu = it.mu();
  const double xitheta = ctx.xi * ctx.problem->barrier().theta();
  Eigen::VectorXd psi(2 * m + 2);
  psi.head(m) = it.grad_u() / tau;
  psi(m) = -(it.grad_u().dot(it.u()) + xitheta) / tau;
  psi.segment(m + 1, m) = (tau / mu) * it.u();
  psi(2 * m + 1) = tau / mu;
  return psi;
}

Eigen::VectorXd psi_corrector(const KktContext& ctx, const Iterate& it) {
  const int m = ctx.m;
  const double tau = it.tau();
  const double mu = it.mu();
  Eigen::VectorXd psi(2 * m + 2);
  psi.head(m) = it.grad_u() / tau;
  psi(m) = -it.grad_u().dot(it.u()) / tau +
           (it.y().dot(it.conj_point()) + ctx.ytau0 + tau * it.objective()) /
               mu;
  psi.segment(m + 1, m) = (tau / mu) * it.conj_point();
  psi(2 * m + 1) = tau / mu;
  return psi;
}

Eigen::VectorXd u_transpose_times(const KktContext& ctx,
                                  const Eigen::VectorXd& f) {
  const int m = ctx.m;
  if (f.size() != 2 * m + 2) {
    throw ValidationError("full-space vector has the wrong length");
  }
  return ctx.u1.transpose() * f.head(m + 1) +
         ctx.u2.transpose() * f.tail(m + 1);
}

CorrectorRhs corrector_rhs(const KktContext& ctx, const Iterate& it,
                           const KktSystem& sys) {
  CorrectorRhs out;
  out.u_psi = u_transpose_times(ctx, psi_corrector(ctx, it));
  const Eigen::VectorXd s_inv_upsi = sys.solve(out.u_psi);
  const Eigen::VectorXd s_inv_r0 = sys.solve(ctx.r0);
  const double denom = ctx.r0.dot(s_inv_r0);
  if (!(denom > 0.0) || !std::isfinite(denom)) {
    throw NumericalError("corrector projection lost positive definiteness");
  }
  out.beta = -ctx.r0.dot(s_inv_upsi) / denom;
  out.rhs = -(out.u_psi + out.beta * ctx.r0);
  out.solution = -(s_inv_upsi + out.beta * s_inv_r0);
  out.decrement_sq = std::max(0.0, out.rhs.dot(out.solution));
  out.scale_sq = std::max(0.0, out.u_psi.dot(s_inv_upsi));
  return out;
}

}  // namespace ddipm
