// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_BARRIER_HPP_
#define DDIPM_BARRIER_HPP_

#include <Eigen/Core>
#include <optional>
#include <string>

namespace ddipm {

// Result of evaluating a convex conjugate Phi*(y) = sup_u { <y,u> - Phi(u) }.
struct ConjugateResult {
  double value = 0.0;          // Phi*(y)
  Eigen::VectorXd u_star;      // the maximizer; equals the gradient of Phi*
  bool warm_start_used = false;
};

// Self-concordant barrier oracle for one convex set D = cl(dom Phi).
//
// Contract, for u in the open domain:
//   value/gradient/hessian are exact closed forms,
//   hessian(u) is symmetric positive definite,
//   <gradient(u), hessian(u)^{-1} gradient(u)> <= theta(),
//   conjugate(y) solves the dual localization to local-norm tolerance
//     1e-12 * (1 + |y|).
// Evaluation outside the open domain throws DomainError; conjugate evaluation
// outside the dual interior throws DualInteriorError.
class BarrierOracle {
 public:
  virtual ~BarrierOracle() = default;

  virtual int dim() const = 0;
  virtual double theta() const = 0;
  virtual std::string kind() const = 0;

  // True iff u lies in the open domain of the barrier.
  virtual bool contains(const Eigen::VectorXd& u) const = 0;
  // Smallest slack of the defining inequalities; positive iff interior.
  virtual double interior_margin(const Eigen::VectorXd& u) const = 0;
  // True iff y lies in the interior of the dual domain (the polar side on
  // which the conjugate is finite).
  virtual bool dual_contains(const Eigen::VectorXd& y) const;

  virtual double value(const Eigen::VectorXd& u) const = 0;
  virtual Eigen::VectorXd gradient(const Eigen::VectorXd& u) const = 0;
  virtual Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const = 0;

  // <d, hessian(u) d>.  The default forms the matrix; blocks override it with
  // factored expressions whose terms stay bounded near the boundary, where the
  // materialized entries grow like 1/margin^2 and the quadratic form loses its
  // leading digits to cancellation.
  virtual double hessian_quad(const Eigen::VectorXd& u,
                              const Eigen::VectorXd& d) const;

  // Canonical strictly interior point used as the default start.
  virtual Eigen::VectorXd cold_start() const = 0;

  // Conjugate via damped Newton on Phi(u) - <y,u>, warm started when the
  // given point is interior.  Blocks with closed forms override this.
  virtual ConjugateResult conjugate(
      const Eigen::VectorXd& y,
      const std::optional<Eigen::VectorXd>& warm = std::nullopt) const;

  // Phi(u) + Phi*(y) - <y,u> given the conjugate maximizer u_star at y.  The
  // default groups the terms as Phi(u) - Phi(u_star) - <y, u - u_star>, which
  // is exact in real arithmetic; blocks may override with better conditioned
  // forms.
  virtual double conjugate_pair_gap(const Eigen::VectorXd& u,
                                    const Eigen::VectorXd& y,
                                    const Eigen::VectorXd& u_star) const;

 protected:
  // Shared damped-Newton implementation for conjugate().
  ConjugateResult conjugate_newton(const Eigen::VectorXd& y,
                                   const std::optional<Eigen::VectorXd>& warm,
                                   int block_index = -1) const;
};

}  // namespace ddipm

#endif  // DDIPM_BARRIER_HPP_
