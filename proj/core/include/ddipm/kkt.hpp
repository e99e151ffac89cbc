// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_KKT_HPP_
#define DDIPM_KKT_HPP_

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "ddipm/path.hpp"
#include "ddipm/problem.hpp"

namespace ddipm {

// Orthonormal rows spanning the left null space of a (m x n, m >= n, full
// column rank): the returned f is (m-n) x m with f a = 0 and f f' = I.
Eigen::MatrixXd nullspace_basis(const Eigen::MatrixXd& a);

// Constant-per-problem data of the reduced Newton system.  Directions live
// in the (m+1)-dimensional coordinates (xbar, tau, v) with
//   x = xbar / tau  (so d_x = d_xbar - d_tau x at the current point),
//   y = y0 - (tau - 1) c_a - f' v,
// and the residual map is r(q) = U' psi(q) + r0 / mu for the full lifted
// gradient psi.
struct KktContext {
  const DomainDrivenProblem* problem = nullptr;
  double xi = 0.0;
  int m = 0, n = 0;

  Eigen::VectorXd y0;   // Phi'(z0)
  double ytau0 = 0.0;   // -<y0, z0> - xi theta
  Eigen::VectorXd c_a;  // minimum-norm solution of A' c_a = c
  Eigen::MatrixXd f;    // nullspace_basis(A)
  Eigen::VectorXd r0;   // (-A'y0 - c, -ytau0 + <c_a, z0>, f z0)

  // The two (m+1) x (m+1) halves of the lifting matrix U:
  //   u1 = [A 0 0; 0 1 0] (primal rows), u2 = [0 -c_a -f'; c' 0 0] (dual).
  Eigen::MatrixXd u1, u2;

  Eigen::MatrixXd u_dense() const;  // (2m+2) x (m+1), tests only
};

KktContext assemble_kkt(const DomainDrivenProblem& problem, double xi);

struct Direction {
  Eigen::VectorXd d;  // raw coordinates (d_xbar, d_tau, d_v)
  Eigen::VectorXd d_xbar;
  double d_tau = 0.0;
  Eigen::VectorXd d_v;
  Eigen::VectorXd d_x;  // d_xbar - d_tau x
  Eigen::VectorXd d_y;  // -d_tau c_a - f' d_v
};

// The SPD Schur matrix S = u1' Hbar u1 + (1/mu^2) u2' Hbar^{-1} u2 of one
// iterate, factored once and reused for every solve at that iterate.
// Factorization retries with an escalating diagonal shift before giving up.
// The factorization and solves run in extended precision: near certification
// the equilibrated matrix has eigenvalues at the double rounding floor, and
// the extra mantissa bits keep the predictor direction pointing up the path.
class KktSystem {
 public:
  KktSystem(const KktContext& ctx, const BarHessian& hbar, double mu);

  const Eigen::MatrixXd& matrix() const { return s_; }
  double shift() const { return shift_; }

  // Solves S d = rhs with iterative refinement (target residual 1e-9 |rhs|).
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
  Direction direction(const Eigen::VectorXd& rhs,
                      const Eigen::VectorXd& x) const;
  // Splits an already-solved reduced vector without another solve.
  Direction split(const Eigen::VectorXd& d, const Eigen::VectorXd& x) const;

 private:
  using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

  const KktContext* ctx_;
  Eigen::MatrixXd s_;  // unshifted, symmetrized
  VectorXld scale_;    // Jacobi equilibration, diag(S)^{-1/2}
  MatrixXld s_eff_;    // scaled matrix + shift I, the factored one
  Eigen::LLT<MatrixXld> llt_;
  double shift_ = 0.0;
};

// Predictor right-hand side r0 / mu^2; the solution increases mu by
// (alpha2 / (xi theta)) d' r0 along the step.
Eigen::VectorXd predictor_rhs(const KktContext& ctx, double mu);

// Full-space gradients of the two potentials, in the (2m+2)-dimensional
// lifted coordinates (tests exercise their identities):
//   psi_predictor = (Phi'(u)/tau, -( <Phi'(u),u> + xi theta )/tau,
//                    (tau/mu) u, tau/mu)
//   psi_corrector replaces the primal block pair with the conjugate point.
Eigen::VectorXd psi_predictor(const KktContext& ctx, const Iterate& it);
Eigen::VectorXd psi_corrector(const KktContext& ctx, const Iterate& it);

// U' f for a full-space vector f of size 2m+2.
Eigen::VectorXd u_transpose_times(const KktContext& ctx,
                                  const Eigen::VectorXd& f);

struct CorrectorRhs {
  Eigen::VectorXd rhs;    // -(U' psi_c + beta r0)
  double beta = 0.0;      // multiplier keeping d' r0 = 0 (mu frozen)
  Eigen::VectorXd u_psi;  // U' psi_c
  // Combined solution -(S^{-1} u_psi + beta S^{-1} r0).  Built from the same
  // two solves that define beta, so d' r0 cancels to rounding; a fresh solve
  // of rhs would reintroduce an O(solver tolerance) mu drift.
  Eigen::VectorXd solution;
  double decrement_sq = 0.0;  // rhs' S^{-1} rhs, the potential decrease rate
  double scale_sq = 0.0;      // u_psi' S^{-1} u_psi, for relative tests
};

CorrectorRhs corrector_rhs(const KktContext& ctx, const Iterate& it,
                           const KktSystem& sys);

}  // namespace ddipm

#endif  // DDIPM_KKT_HPP_
