// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include <cmath>
#include <memory>

#include <doctest.h>

#include <Eigen/Cholesky>

#include "ddipm/blocks.hpp"
#include "ddipm/errors.hpp"
#include "ddipm/kkt.hpp"
#include "ddipm/path.hpp"
#include "ddipm/scfun.hpp"
#include "support.hpp"

using namespace ddipm;
using testing::Rng;

namespace {

constexpr double kXi = 2.0;

Iterate start_of(const DomainDrivenProblem& p, const KktContext& ctx) {
  return Iterate::make(p, Eigen::VectorXd::Zero(p.num_vars()), 1.0, ctx.y0,
                       kXi);
}

}  // namespace

TEST_CASE("the canonical start has mu = 1 and sits on the path") {
  for (const auto& entry : testing::desk_catalog()) {
    CAPTURE(entry.name);
    const KktContext ctx = assemble_kkt(entry.problem, kXi);
    const Iterate it = start_of(entry.problem, ctx);

    CHECK(std::abs(it.mu() - 1.0) <= 1e-12);
    CHECK(it.omega() <= 1e-10);
    CHECK(it.tau() == 1.0);
    CHECK((it.u() - entry.problem.z0()).norm() == 0.0);
    CHECK((it.y0() - ctx.y0).norm() == 0.0);
    CHECK(it.y_tau0() == ctx.ytau0);
    CHECK(it.objective() == 0.0);
    CHECK(it.gap().lower <= it.gap().upper);
    CHECK(it.residuals().ok());
    // On the path the conjugate point coincides with u itself.
    CHECK((it.conj_point() - it.u()).norm() <= 1e-7 * (1.0 + it.u().norm()));
    CHECK(it.gap().kappa <= 1e-6);
  }
}

TEST_CASE("hand-checked values on the one-dimensional instance") {
  const DomainDrivenProblem p = testing::desk_lp1();
  const KktContext ctx = assemble_kkt(p, kXi);
  CHECK(ctx.y0(0) == 1.0);       // 1 / (beta - z0) at z0 = 0, beta = 1
  CHECK(ctx.ytau0 == -2.0);      // -<y0, z0> - xi theta

  const Iterate it =
      Iterate::make(p, Eigen::VectorXd::Constant(1, 0.5), 2.0,
                    Eigen::VectorXd::Constant(1, 2.0), kXi);
  CHECK(it.mu() == 2.0);    // exact: -(1/2) * 2 * (-2 + (-0.5) + 0.5)
  CHECK(it.omega() == 0.0);  // tau y / mu = 2 matches Phi'(u) at u = 0.5
  CHECK(it.u()(0) == 0.5);
  CHECK(it.prox_residual() <= 1e-12);

  // True duality gap of (x, y/tau): <c,x> + beta * (y/tau) = -0.5 + 1.
  CHECK(it.gap().lower <= 0.5 + 1e-12);
  CHECK(it.gap().upper >= 0.5 - 1e-12);
}

TEST_CASE("the three mu expressions agree off the path") {
  Rng rng(41);
  for (const auto& entry : testing::desk_catalog()) {
    CAPTURE(entry.name);
    const KktContext ctx = assemble_kkt(entry.problem, kXi);
    int produced = 0;
    for (int rep = 0; rep < 8 && produced < 4; ++rep) {
      auto maybe = testing::random_qdd_iterate(entry.problem, ctx, kXi, rng);
      if (!maybe) continue;
      ++produced;
      const Iterate& it = *maybe;
      const auto forms =
          mu_forms(entry.problem, it.x(), it.tau(), it.y(), kXi);
      const double scale = 1.0 + std::abs(forms[0]);
      CHECK(std::abs(forms[0] - forms[1]) <= 1e-9 * scale);
      CHECK(std::abs(forms[0] - forms[2]) <= 1e-9 * scale);
      CHECK(it.mu() ==
            doctest::Approx(mu_of(entry.problem, it.x(), it.tau(), it.y(),
                                  kXi))
                .epsilon(1e-15));
    }
    CHECK(produced > 0);
  }
}

TEST_CASE("proximity is sandwiched by rho of both residual norms") {
  Rng rng(42);
  for (const auto& entry : testing::desk_catalog()) {
    CAPTURE(entry.name);
    const KktContext ctx = assemble_kkt(entry.problem, kXi);
    int produced = 0;
    for (int rep = 0; rep < 10 && produced < 5; ++rep) {
      auto maybe = testing::random_qdd_iterate(entry.problem, ctx, kXi, rng);
      if (!maybe) continue;
      ++produced;
      const Iterate& it = *maybe;
      const double omega = it.omega();
      const double r = it.prox_residual();
      const double kappa = it.gap().kappa;
      const double slack = 1e-9 * (1.0 + omega + r);
      CHECK(omega >= scfun::rho(r) * (1.0 - 1e-9) - slack);
      if (r < 1.0) CHECK(omega <= scfun::rho(-r) * (1.0 + 1e-9) + slack);
      CHECK(omega >= scfun::rho(kappa) * (1.0 - 1e-9) - slack);
      if (kappa < 1.0)
        CHECK(omega <= scfun::rho(-kappa) * (1.0 + 1e-9) + slack);
    }
    CHECK(produced > 0);
  }
}

TEST_CASE("augmented Hessian forms agree with the dense assembly") {
  Rng rng(43);
  std::normal_distribution<double> nd;
  for (const auto& entry : testing::desk_catalog()) {
    CAPTURE(entry.name);
    const KktContext ctx = assemble_kkt(entry.problem, kXi);
    auto maybe = testing::random_qdd_iterate(entry.problem, ctx, kXi, rng);
    if (!maybe) maybe = start_of(entry.problem, ctx);
    const Iterate& it = *maybe;
    const BarHessian bar(it);
    const int m = entry.problem.num_rows();
    CHECK(bar.dim() == m + 1);

    const Eigen::MatrixXd dense = bar.dense();
    CHECK((dense - dense.transpose()).norm() <= 1e-12 * (1.0 + dense.norm()));
    // Structured blocks: Phi''/tau^2, the mixed column h, the corner zeta.
    const double t2 = it.tau() * it.tau();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(m, m);
    CHECK((dense.topLeftCorner(m, m) - it.hess_u().apply(eye) / t2).norm() <=
          1e-10 * (1.0 + dense.norm()));
    CHECK((dense.topRightCorner(m, 1) - bar.h()).norm() <=
          1e-10 * (1.0 + bar.h().norm()));
    CHECK(dense(m, m) == doctest::Approx(bar.zeta()).epsilon(1e-12));

    Eigen::LLT<Eigen::MatrixXd> llt(dense);
    REQUIRE(llt.info() == Eigen::Success);

    for (int rep = 0; rep < 4; ++rep) {
      Eigen::VectorXd d(m);
      for (int i = 0; i < m; ++i) d(i) = nd(rng);
      const double dtau = nd(rng);
      Eigen::VectorXd full(m + 1);
      full << d, dtau;

      const auto [ad, adtau] = bar.apply(d, dtau);
      Eigen::VectorXd dense_ad = dense * full;
      CHECK((ad - dense_ad.head(m)).norm() <= 1e-9 * (1.0 + dense_ad.norm()));
      CHECK(std::abs(adtau - dense_ad(m)) <= 1e-9 * (1.0 + dense_ad.norm()));

      const auto [bd, bdtau] = bar.inv_apply(ad, adtau);
      CHECK((bd - d).norm() <= 1e-7 * (1.0 + d.norm()));
      CHECK(std::abs(bdtau - dtau) <= 1e-7 * (1.0 + std::abs(dtau)));

      const double q = bar.quad(d, dtau);
      CHECK(q == doctest::Approx(full.dot(dense * full))
                     .epsilon(1e-9)
                     .scale(1.0 + std::abs(q)));
      CHECK(bar.quad_expanded(d, dtau) ==
            doctest::Approx(q).epsilon(1e-9).scale(1.0 + std::abs(q)));
      const double iq = bar.inv_quad(d, dtau);
      CHECK(iq == doctest::Approx(full.dot(llt.solve(full)))
                      .epsilon(1e-7)
                      .scale(1.0 + std::abs(iq)));
    }

    const Eigen::MatrixXd probes = Eigen::MatrixXd::Random(m + 1, 3);
    CHECK((bar.apply_matrix(probes) - dense * probes).norm() <=
          1e-9 * (1.0 + dense.norm()));
    CHECK((dense * bar.inv_apply_matrix(probes) - probes).norm() <=
          1e-7 * (1.0 + probes.norm()));
  }
}

TEST_CASE("support estimates bracket the linear support function exactly") {
  Rng rng(44);
  const DomainDrivenProblem p = testing::desk_lp2();
  Eigen::VectorXd beta(p.num_rows());
  for (int i = 0; i < p.barrier().block_count(); ++i)
    beta(i) = dynamic_cast<const LinearBlock&>(p.barrier().block(i)).beta();

  std::uniform_real_distribution<double> pos(0.1, 3.0);
  for (int rep = 0; rep < 10; ++rep) {
    Eigen::VectorXd y(p.num_rows());
    for (int i = 0; i < y.size(); ++i) y(i) = pos(rng);
    const double truth = testing::lp_support(beta, y);
    for (double k : {1.0, 1e3, 1e6}) {
      const auto [lower, upper] = support_estimate(p, y, k);
      const double theta = p.barrier().theta();
      CHECK(upper - lower ==
            doctest::Approx(theta / k).epsilon(1e-12).scale(1.0 + theta / k));
      // Half lines make the one-solve estimate exact at its upper end.
      CHECK(upper ==
            doctest::Approx(truth).epsilon(1e-11).scale(1.0 + std::abs(truth)));
      CHECK(lower <= truth + 1e-11 * (1.0 + std::abs(truth)));
    }
  }
  CHECK_THROWS_AS(
      support_estimate(p, Eigen::VectorXd::Constant(p.num_rows(), -1.0), 1.0),
      DualInteriorError);
}

TEST_CASE("points outside the working set are rejected") {
  const DomainDrivenProblem p = testing::desk_lp1();
  const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(1);
  const Eigen::VectorXd y_ok = Eigen::VectorXd::Constant(1, 1.0);

  CHECK_FALSE(Iterate::try_make(p, x0, -1.0, y_ok, kXi).has_value());
  CHECK_FALSE(Iterate::try_make(p, x0, 0.0, y_ok, kXi).has_value());
  // A x + z0/tau leaves the domain.
  CHECK_FALSE(Iterate::try_make(p, Eigen::VectorXd::Constant(1, 5.0), 1.0,
                                y_ok, kXi)
                  .has_value());
  // y outside the dual interior.
  CHECK_FALSE(Iterate::try_make(p, x0, 1.0,
                                Eigen::VectorXd::Constant(1, -1.0), kXi)
                  .has_value());
  CHECK_THROWS_AS(Iterate::make(p, x0, 1.0,
                                Eigen::VectorXd::Constant(1, -1.0), kXi),
                  DualInteriorError);
  // xi must exceed 1 and shapes must line up.
  CHECK_THROWS_AS(Iterate::make(p, x0, 1.0, y_ok, 1.0), ValidationError);
  CHECK_THROWS_AS(Iterate::make(p, Eigen::VectorXd::Zero(2), 1.0, y_ok, kXi),
                  ValidationError);

  // mu must come out positive: a start with z0 = 1 makes mu = (3 - y)/2.
  std::vector<std::shared_ptr<const BarrierOracle>> blocks;
  blocks.push_back(std::make_shared<LinearBlock>(2.0));
  auto barrier = std::make_shared<DirectSumBarrier>(std::move(blocks));
  const DomainDrivenProblem q(Eigen::MatrixXd::Identity(1, 1),
                              Eigen::VectorXd::Zero(1), barrier,
                              Eigen::VectorXd::Constant(1, 1.0));
  CHECK(Iterate::try_make(q, x0, 1.0, Eigen::VectorXd::Constant(1, 1.0), kXi)
            .has_value());
  CHECK_FALSE(
      Iterate::try_make(q, x0, 1.0, Eigen::VectorXd::Constant(1, 5.0), kXi)
          .has_value());
}

TEST_CASE("residual diagnostics flag broken dual equations") {
  const DomainDrivenProblem p = testing::desk_lp1();
  const Iterate good =
      Iterate::make(p, Eigen::VectorXd::Constant(1, 0.5), 2.0,
                    Eigen::VectorXd::Constant(1, 2.0), kXi);
  CHECK(good.residuals().ok());
  CHECK(qdd_residuals(good).dual_residual == good.residuals().dual_residual);

  const Iterate bad =
      Iterate::make(p, Eigen::VectorXd::Constant(1, 0.5), 2.0,
                    Eigen::VectorXd::Constant(1, 7.0), kXi);
  const QddResiduals res = bad.residuals();
  CHECK(res.tau_positive);
  CHECK(res.primal_interior);
  CHECK(res.dual_interior);
  CHECK(res.dual_residual == doctest::Approx(5.0));
  CHECK_FALSE(res.ok());
}

TEST_CASE("gap bounds contain the true gap along random working points") {
  Rng rng(45);
  const DomainDrivenProblem p = testing::desk_lp2();
  const KktContext ctx = assemble_kkt(p, kXi);
  Eigen::VectorXd beta(p.num_rows());
  for (int i = 0; i < p.barrier().block_count(); ++i)
    beta(i) = dynamic_cast<const LinearBlock&>(p.barrier().block(i)).beta();

  int produced = 0;
  for (int rep = 0; rep < 20 && produced < 10; ++rep) {
    auto maybe = testing::random_qdd_iterate(p, ctx, kXi, rng);
    if (!maybe) continue;
    ++produced;
    const Iterate& it = *maybe;
    const double truth =
        it.objective() + testing::lp_support(beta, it.y() / it.tau());
    const GapBounds gap = it.gap();
    CHECK(duality_gap_bounds(it).lower == gap.lower);
    const double slack = 1e-9 * (1.0 + std::abs(truth));
    CHECK(gap.lower <= truth + slack);
    CHECK(gap.upper >= truth - slack);
  }
  CHECK(produced >= 5);
}

TEST_CASE("warm starts reproduce the same iterate") {
  const DomainDrivenProblem p = testing::desk_mixed();
  const KktContext ctx = assemble_kkt(p, kXi);
  const Iterate it = start_of(p, ctx);
  const Iterate warm =
      Iterate::make(p, it.x(), it.tau(), it.y(), kXi, it.conj_point());
  CHECK(warm.mu() == it.mu());
  CHECK(std::abs(warm.omega() - it.omega()) <= 1e-12);
  CHECK((warm.conj_point() - it.conj_point()).norm() <=
        1e-9 * (1.0 + it.conj_point().norm()));
}
