// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include <cmath>
#include <limits>

#include <doctest.h>

#include "ddipm/errors.hpp"
#include "ddipm/scfun.hpp"

using namespace ddipm;

TEST_CASE("rho matches its closed form and edge behavior") {
  CHECK(scfun::rho(0.0) == 0.0);
  CHECK(scfun::rho(1.0) == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-15));
  CHECK(scfun::rho(-0.5) ==
        doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-15));
  CHECK(std::isinf(scfun::rho(-1.0)));
  CHECK(std::isinf(scfun::rho(-2.0)));
  for (double t : {-0.9, -0.3, -1e-3, 1e-3, 0.4, 2.0, 50.0}) {
    CHECK(scfun::rho(t) > 0.0);
  }
}

TEST_CASE("rho series branch joins the log branch smoothly") {
  // Either side of the series cut at |t| = 1e-4.
  for (double t : {9.9999e-5, 1.00001e-4, -9.9999e-5, -1.00001e-4}) {
    const double exact = t - std::log1p(t);
    CHECK(scfun::rho(t) == doctest::Approx(exact).epsilon(1e-10));
  }
  // Deep series regime against the quadratic leading term.
  CHECK(scfun::rho(1e-8) == doctest::Approx(0.5e-16).epsilon(1e-7));
}

TEST_CASE("rho(-t) <= t^2 on (0, 0.6]") {
  for (double t = 0.01; t <= 0.6; t += 0.01) {
    CHECK(scfun::rho(-t) <= t * t * (1.0 + 1e-12));
  }
}

TEST_CASE("sigma inverts rho on the nonnegative branch") {
  for (double s : {1e-14, 1e-10, 1e-6, 1e-3, 0.1, 1.0, 10.0, 1e3, 1e8}) {
    const double t = scfun::sigma(s);
    CHECK(t >= 0.0);
    CHECK(scfun::rho(t) == doctest::Approx(s).epsilon(1e-11));
    CHECK(t <= std::sqrt(2.0 * s) + s + 1e-12);
  }
  for (double t : {1e-7, 1e-3, 0.5, 2.0, 100.0}) {
    CHECK(scfun::sigma(scfun::rho(t)) == doctest::Approx(t).epsilon(1e-9));
  }
  CHECK(scfun::sigma(0.0) == 0.0);
  CHECK_THROWS_AS(scfun::sigma(-1e-3), DomainError);
}

TEST_CASE("sigma is monotone") {
  double prev = 0.0;
  for (double s = 0.1; s <= 10.0; s += 0.1) {
    const double t = scfun::sigma(s);
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("finite difference harness reproduces cubic derivatives") {
  const auto f = [](const Eigen::VectorXd& u) {
    return u.array().cube().sum();
  };
  Eigen::VectorXd u(3);
  u << 0.7, -1.2, 2.0;
  const Eigen::VectorXd g = scfun::fd_gradient(f, u);
  for (int i = 0; i < 3; ++i) {
    CHECK(g(i) == doctest::Approx(3.0 * u(i) * u(i)).epsilon(1e-7));
  }
  const Eigen::MatrixXd h = scfun::fd_hessian(f, u);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double want = i == j ? 6.0 * u(i) : 0.0;
      CHECK(h(i, j) == doctest::Approx(want).epsilon(1e-5).scale(1.0));
    }
  }
  Eigen::VectorXd d(3);
  d << 1.0, 0.5, -0.25;
  const double third = scfun::fd_third_directional(f, u, d);
  CHECK(third == doctest::Approx(6.0 * d.array().cube().sum()).epsilon(1e-4));
}
