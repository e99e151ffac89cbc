// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include <Eigen/Cholesky>
#include <cmath>

#include "ddipm/barrier.hpp"
#include "ddipm/errors.hpp"

namespace ddipm {

bool BarrierOracle::dual_contains(const Eigen::VectorXd& y) const {
  try {
    conjugate(y, std::nullopt);
    return true;
  } catch (const DualInteriorError&) {
    return false;
  }
}

ConjugateResult BarrierOracle::conjugate(
    const Eigen::VectorXd& y, const std::optional<Eigen::VectorXd>& warm) const {
  return conjugate_newton(y, warm);
}

double BarrierOracle::conjugate_pair_gap(const Eigen::VectorXd& u,
                                         const Eigen::VectorXd& y,
                                         const Eigen::VectorXd& u_star) const {
  return value(u) - value(u_star) - y.dot(u - u_star);
}

double BarrierOracle::hessian_quad(const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& d) const {
  return d.dot(hessian(u) * d);
}

// Damped Newton on g(u) = Phi(u) - <y,u>.  The minimizer exists iff y lies in
// the interior of the dual domain; divergence (iterates off to 1e12 or no
// convergence within the iteration cap) is reported as a dual-interior
// violation.  Step 1/(1 + lambda) keeps every trial inside the Dikin ellipsoid.
ConjugateResult BarrierOracle::conjugate_newton(
    const Eigen::VectorXd& y, const std::optional<Eigen::VectorXd>& warm,
    int block_index) const {
  const bool warm_ok = warm.has_value() && contains(*warm);
  Eigen::VectorXd u = warm_ok ? *warm : cold_start();
  const double tol = 1e-12 * (1.0 + y.norm());
  double lambda_prev = std::numeric_limits<double>::infinity();
  int stall = 0;
  for (int it = 0; it < 500; ++it) {
    const Eigen::VectorXd g = gradient(u) - y;
    Eigen::LLT<Eigen::MatrixXd> llt(hessian(u));
    if (llt.info() != Eigen::Success)
      throw DualInteriorError("conjugate: hessian factorization broke down",
                              block_index);
    const Eigen::VectorXd p = llt.solve(-g);
    const double lambda = std::sqrt(std::max(0.0, -g.dot(p)));
    ConjugateResult out;
    if (lambda <= tol) {
      out.value = y.dot(u) - value(u);
      out.u_star = u;
      out.warm_start_used = warm_ok;
      return out;
    }
    // Detect the floating-point floor: no progress over several steps while
    // already near the tolerance counts as converged.
    if (lambda >= 0.9 * lambda_prev) {
      if (++stall >= 5 && lambda <= 1e4 * tol) {
        out.value = y.dot(u) - value(u);
        out.u_star = u;
        out.warm_start_used = warm_ok;
        return out;
      }
    } else {
      stall = 0;
    }
    lambda_prev = lambda;
    double step = 1.0 / (1.0 + lambda);
    Eigen::VectorXd next = u + step * p;
    int bt = 0;
    while (!contains(next) && bt < 60) {
      step *= 0.5;
      next = u + step * p;
      ++bt;
    }
    if (bt >= 60)
      throw DualInteriorError("conjugate: step stuck at the domain boundary",
                              block_index);
    u = next;
    if (u.cwiseAbs().maxCoeff() > 1e12)
      throw DualInteriorError("conjugate: iterates diverged", block_index);
  }
  throw DualInteriorError("conjugate: no convergence in 500 damped steps",
                          block_index);
}

}  // namespace ddipm
