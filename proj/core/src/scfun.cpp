// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/scfun.hpp"

#include <cmath>

#include "ddipm/errors.hpp"

namespace ddipm {
namespace scfun {

double rho(double t) {
  if (t <= -1.0) return std::numeric_limits<double>::infinity();
  if (std::abs(t) < 1e-4) {
    // t - log1p(t) loses all significant digits near 0; use the series.
    return t * t * (0.5 + t * (-1.0 / 3.0 + t * 0.25));
  }
  return t - std::log1p(t);
}

double sigma(double s) {
  if (s < 0.0) throw DomainError("sigma: negative argument");
  if (s == 0.0) return 0.0;
  // sigma(s) <= sqrt(2s) + s; pad the bracket by 1 for safety.
  double lo = 0.0;
  double hi = s + std::sqrt(2.0 * s) + 1.0;
  double t = std::min(hi, std::sqrt(2.0 * s));  // rho(t) ~ t^2/2 near 0
  for (int it = 0; it < 200; ++it) {
    double f = rho(t) - s;
    if (f > 0.0)
      hi = t;
    else
      lo = t;
    double deriv = t / (1.0 + t);
    double next = (deriv != 0.0) ? t - f / deriv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    bool done = std::abs(next - t) <= 1e-14 * (1.0 + std::abs(next));
    t = next;
    if (done || hi - lo <= 1e-15) break;
  }
  return t;
}

namespace {

double probe(const ScalarField& f, const Eigen::VectorXd& u) {
  double v = f(u);
  if (!std::isfinite(v))
    throw DomainError("finite-difference probe left the domain");
  return v;
}

}  // namespace

Eigen::VectorXd fd_gradient(const ScalarField& f, const Eigen::VectorXd& u,
                            double h) {
  const double step = h * (1.0 + u.cwiseAbs().maxCoeff());
  Eigen::VectorXd g(u.size());
  Eigen::VectorXd p = u;
  for (int i = 0; i < u.size(); ++i) {
    p(i) = u(i) + step;
    double fp = probe(f, p);
    p(i) = u(i) - step;
    double fm = probe(f, p);
    p(i) = u(i);
    g(i) = (fp - fm) / (2.0 * step);
  }
  return g;
}

Eigen::MatrixXd fd_hessian(const ScalarField& f, const Eigen::VectorXd& u,
                           double h) {
  const double step = h * (1.0 + u.cwiseAbs().maxCoeff());
  const int n = static_cast<int>(u.size());
  Eigen::MatrixXd H(n, n);
  const double f0 = probe(f, u);
  Eigen::VectorXd p = u;
  for (int i = 0; i < n; ++i) {
    p(i) = u(i) + step;
    double fp = probe(f, p);
    p(i) = u(i) - step;
    double fm = probe(f, p);
    p(i) = u(i);
    H(i, i) = (fp - 2.0 * f0 + fm) / (step * step);
    for (int j = i + 1; j < n; ++j) {
      p(i) = u(i) + step;
      p(j) = u(j) + step;
      double fpp = probe(f, p);
      p(j) = u(j) - step;
      double fpm = probe(f, p);
      p(i) = u(i) - step;
      double fmm = probe(f, p);
      p(j) = u(j) + step;
      double fmp = probe(f, p);
      p(i) = u(i);
      p(j) = u(j);
      H(i, j) = H(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
    }
  }
  return H;
}

double fd_third_directional(const ScalarField& f, const Eigen::VectorXd& u,
                            const Eigen::VectorXd& dir, double h) {
  const double step = h * (1.0 + u.cwiseAbs().maxCoeff());
  const double f2p = probe(f, u + 2.0 * step * dir);
  const double f1p = probe(f, u + step * dir);
  const double f1m = probe(f, u - step * dir);
  const double f2m = probe(f, u - 2.0 * step * dir);
  return (f2p - 2.0 * f1p + 2.0 * f1m - f2m) / (2.0 * step * step * step);
}

}  // namespace scfun
}  // namespace ddipm
