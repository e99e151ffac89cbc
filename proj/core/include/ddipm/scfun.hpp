// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_SCFUN_HPP_
#define DDIPM_SCFUN_HPP_

#include <Eigen/Core>
#include <functional>
#include <limits>

namespace ddipm {
namespace scfun {

// rho(t) = t - ln(1 + t) for t > -1, +inf otherwise.  Nonnegative, zero only
// at t = 0, strictly increasing on [0, inf).
double rho(double t);

// sigma(s) = the unique t >= 0 with rho(t) = s, solved to absolute tolerance
// 1e-12 by a safeguarded Newton iteration on the bracket [0, s + sqrt(2s) + 1].
// Throws DomainError for s < 0.
double sigma(double s);

using ScalarField = std::function<double(const Eigen::VectorXd&)>;

// Central-difference harness used by the property tests.  Steps are relative:
// the probe spacing is h * (1 + max|u_i|).  A probe that evaluates to a
// non-finite value throws DomainError.
Eigen::VectorXd fd_gradient(const ScalarField& f, const Eigen::VectorXd& u,
                            double h = 1e-5);
Eigen::MatrixXd fd_hessian(const ScalarField& f, const Eigen::VectorXd& u,
                           double h = 1e-4);
// Third directional derivative f'''(u)[dir, dir, dir].
double fd_third_directional(const ScalarField& f, const Eigen::VectorXd& u,
                            const Eigen::VectorXd& dir, double h = 1e-3);

}  // namespace scfun
}  // namespace ddipm

#endif  // DDIPM_SCFUN_HPP_
