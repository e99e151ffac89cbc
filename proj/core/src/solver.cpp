// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ddipm/errors.hpp"

namespace ddipm {

namespace {

constexpr double kFractionToBoundary = 0.99;
constexpr double kMuGrowthCap = 1e4;  // per predictor step
constexpr int kPredictorTrials = 60;
constexpr double kPredictorBackoff = 0.8;
constexpr int kCorrectorTrials = 40;
constexpr double kCorrectorBackoff = 0.5;
constexpr double kNoOpRel = 1e-12;

// Largest t with u + t du strictly inside the domain (inf when the whole ray
// stays inside), found by doubling and bisection on the membership test.
double ray_boundary(const DirectSumBarrier& barrier, const Eigen::VectorXd& u,
                    const Eigen::VectorXd& du) {
  const double inf = std::numeric_limits<double>::infinity();
  const double du_scale = du.lpNorm<Eigen::Infinity>();
  const double u_scale = std::max(1.0, u.lpNorm<Eigen::Infinity>());
  if (!(du_scale > 1e-16 * u_scale)) return inf;
  double lo = 0.0;
  double hi = 1.0;
  if (barrier.contains(u + du)) {
    lo = 1.0;
    bool capped = false;
    while (hi < 1e18) {
      hi *= 4.0;
      if (!barrier.contains(u + hi * du)) {
        capped = true;
        break;
      }
      lo = hi;
    }
    if (!capped) return inf;
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (barrier.contains(u + mid * du)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
    case Status::kMuLimit: return "mu_limit";
    case Status::kIterLimit: return "iter_limit";
    case Status::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

void Settings::validate() const {
  if (!std::isfinite(xi) || !(xi > 1.0)) {
    throw ValidationError("xi must be a finite number above 1");
  }
  if (!strict) {
    if (!std::isfinite(delta1) || !(delta1 > 0.0) ||
        !std::isfinite(delta2) || !(4.0 * delta1 < delta2)) {
      throw ValidationError(
          "proximity thresholds need 0 < 4 delta1 < delta2");
    }
  }
  if (!(eps_gap > 0.0) || !(eps_feas > 0.0) || !(eps_cert > 0.0)) {
    throw ValidationError("tolerances must be positive");
  }
  if (max_iter < 1) throw ValidationError("max_iter must be at least 1");
  if (!(mu_max > 1.0)) throw ValidationError("mu_max must exceed 1");
}

TheoryConstants TheoryConstants::from_xi(double xi) {
  if (!std::isfinite(xi) || !(xi > 1.0)) {
    throw ValidationError("xi must be a finite number above 1");
  }
  TheoryConstants t;
  const double q = 1.0 / std::sqrt(xi - 1.0);
  t.xi1 = 8.0 * std::sqrt(xi / (xi - 1.0));
  t.xi2 = 3.0 * q + 3.5;
  t.xi3 = 0.5 * q * (5.5 + 5.0 * q) * (3.0 + 2.0 * q) +
          (2.0 / (xi - 1.0)) * (1.0 + q);
  t.xi4 = 2.0 * q * (1.0 + q) + (std::sqrt(xi) + 2.0) * q;
  t.corrector_alpha2 = 1.0 / (2.0 * (t.xi4 + t.xi2 * t.xi2));
  const double a = t.xi2 * t.xi1;
  const double b = a * a * a + t.xi3 * t.xi1 * t.xi1 * t.xi1;
  t.delta2 = 1.0 / (100.0 * b * b);
  t.delta1 = t.delta2 / 5.0;
  return t;
}

Solver::Solver(const DomainDrivenProblem& problem, Settings settings)
    : problem_(&problem), settings_(settings) {
  settings_.validate();
  theory_ = TheoryConstants::from_xi(settings_.xi);
  delta1_ = settings_.strict ? theory_.delta1 : settings_.delta1;
  delta2_ = settings_.strict ? theory_.delta2 : settings_.delta2;
  ctx_ = assemble_kkt(problem, settings_.xi);
}

Iterate Solver::initialize() const {
  const Eigen::Index n = problem_->a().cols();
  return Iterate::make(*problem_, Eigen::VectorXd::Zero(n), 1.0, ctx_.y0,
                       settings_.xi);
}

Solver::PredictorResult Solver::predictor_step(const Iterate& it) const {
  const double mu = it.mu();
  const double tau = it.tau();
  const double theta = problem_->barrier().theta();
  const double xitheta = settings_.xi * theta;

  const BarHessian hbar(it);
  const KktSystem sys(ctx_, hbar, mu);
  Direction dir = sys.direction(predictor_rhs(ctx_, mu), it.x());

  const double rate = dir.d.dot(ctx_.r0) / xitheta;  // d mu / d alpha2
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw NumericalError("predictor direction does not increase mu");
  }

  double cap = (kMuGrowthCap - 1.0) * mu / rate;
  if (dir.d_tau < 0.0) {
    cap = std::min(cap, kFractionToBoundary * tau / -dir.d_tau);
  }
  const Eigen::VectorXd du = problem_->a() * dir.d_xbar - dir.d_tau * it.u();
  const double t_bound = ray_boundary(problem_->barrier(), it.u(), du);
  if (std::isfinite(t_bound)) {
    const double t = kFractionToBoundary * t_bound;
    if (t * dir.d_tau < 1.0) {
      cap = std::min(cap, t * tau / (1.0 - t * dir.d_tau));
    }
  }

  const double alpha_min = 1e-3 * mu / std::sqrt(theta);
  double alpha = cap;
  for (int trial = 0; trial < kPredictorTrials && alpha >= alpha_min;
       ++trial) {
    const double tau_next = tau + alpha * dir.d_tau;
    if (tau_next > 0.0) {
      auto next = Iterate::try_make(
          *problem_, it.x() + (alpha / tau_next) * dir.d_x, tau_next,
          it.y() + alpha * dir.d_y, settings_.xi, it.conj_point());
      if (next && next->omega() <= delta2_) {
        return {std::move(*next), alpha, std::move(dir)};
      }
    }
    alpha *= kPredictorBackoff;
  }
  throw NumericalError("predictor found no admissible step above its floor");
}

Solver::CorrectorResult Solver::corrector_step(const Iterate& it) const {
  const BarHessian hbar(it);
  const KktSystem sys(ctx_, hbar, it.mu());
  const CorrectorRhs cr = corrector_rhs(ctx_, it, sys);

  if (std::sqrt(cr.decrement_sq) <=
      kNoOpRel * std::max(1.0, std::sqrt(cr.scale_sq))) {
    return {it, 0.0, true};
  }

  const Direction dir = sys.split(cr.solution, it.x());
  const auto attempt = [&](double alpha) -> std::optional<Iterate> {
    const double tau_next = it.tau() + alpha * dir.d_tau;
    if (!(tau_next > 0.0)) return std::nullopt;
    return Iterate::try_make(*problem_,
                             it.x() + (alpha / tau_next) * dir.d_x, tau_next,
                             it.y() + alpha * dir.d_y, settings_.xi,
                             it.conj_point());
  };
  const auto accepted = [&](const std::optional<Iterate>& next) {
    return next && (next->omega() < it.omega() || next->omega() <= delta1_);
  };

  if (settings_.strict) {
    auto next = attempt(theory_.corrector_alpha2);
    if (accepted(next)) {
      return {std::move(*next), theory_.corrector_alpha2, false};
    }
    throw NumericalError("guaranteed corrector step failed to recenter");
  }

  double alpha = 1.0;
  for (int trial = 0; trial < kCorrectorTrials; ++trial) {
    auto next = attempt(alpha);
    if (accepted(next)) return {std::move(*next), alpha, false};
    alpha *= kCorrectorBackoff;
  }
  auto next = attempt(theory_.corrector_alpha2);
  if (accepted(next)) return {std::move(*next), theory_.corrector_alpha2, false};
  throw NumericalError("corrector could not reduce the proximity");
}

Solver::StatusProbe Solver::determine_status(const Iterate& it,
                                             double tau_cap) const {
  StatusProbe probe;
  const double cx = it.objective();

  if (1.0 / it.tau() <= settings_.eps_feas &&
      it.gap().upper <= settings_.eps_gap * (1.0 + std::abs(cx))) {
    probe.status = Status::kOptimal;
    probe.message = "optimality certified by the duality gap bound";
    return probe;
  }

  const Eigen::VectorXd w = (it.tau() / it.mu()) * it.y();
  const double w_inf = w.lpNorm<Eigen::Infinity>();
  if (w_inf > 0.0) {
    const Eigen::VectorXd y_bar = w / w_inf;
    const double aty =
        (problem_->a().transpose() * y_bar).lpNorm<Eigen::Infinity>();
    if (aty <= settings_.eps_cert) {
      const double theta = problem_->barrier().theta();
      const double k = std::max(w_inf, 2.0 * theta / settings_.eps_cert);
      try {
        const auto [lo, hi] =
            support_estimate(*problem_, y_bar, k, it.conj_point());
        if (hi <= -settings_.eps_cert) {
          Certificate cert;
          cert.y_bar = y_bar;
          cert.aty_inf = aty;
          cert.support_lower = lo;
          cert.support_upper = hi;
          cert.k_used = k;
          probe.certificate = std::move(cert);
          probe.status = Status::kInfeasible;
          probe.message = "infeasibility certified by a separating dual ray";
          return probe;
        }
      } catch (const DualInteriorError&) {
        // the scaled ray left the dual interior: inconclusive, keep running
      }
    }
  }

  if (it.mu() >= settings_.mu_max) {
    if (it.tau() <= tau_cap && cx <= -1.0 / settings_.eps_gap) {
      probe.status = Status::kUnbounded;
      probe.ray = it.x() / std::max(1.0, std::abs(cx));
      probe.message = "objective unbounded below along the reported ray";
    } else {
      probe.status = Status::kMuLimit;
      probe.message = "mu reached its ceiling without a certificate";
    }
  }
  return probe;
}

void Solver::fill_report(SolveReport& report, const Iterate& it) const {
  report.mu = it.mu();
  report.tau = it.tau();
  report.omega = it.omega();
  report.x = it.x();
  report.y_scaled = it.y() / it.tau();
  report.objective = it.objective();
  report.gap = it.gap();
  report.primal_feas = 1.0 / it.tau();
}

SolveReport Solver::solve() {
  SolveReport report;
  std::optional<Iterate> cur;
  int iter = 0;
  double tau_ref = 1.0;
  bool tau_ref_set = false;
  std::optional<Status> terminal;
  StatusProbe probe;

  const auto record = [&](char phase, double alpha2) {
    const Iterate& it = *cur;
    report.trace.push_back({iter, phase, it.mu(), it.omega(), it.tau(),
                            alpha2, it.gap().lower, it.gap().upper});
  };

  try {
    cur = initialize();
    record('I', 0.0);
    bool force_pred = false;
    while (iter < settings_.max_iter) {
      if (!tau_ref_set && cur->mu() >= 1e3) {
        tau_ref = std::max(1.0, cur->tau());
        tau_ref_set = true;
      }
      const double tau_cap = 1e6 * tau_ref;

      // Probe every accepted iterate: the certificates are valid anywhere in
      // the admissible set, and near the end the proximity measure is pure
      // rounding noise that a corrector cannot improve.
      probe = determine_status(*cur, tau_cap);
      if (probe.status) {
        terminal = probe.status;
        break;
      }

      if (cur->omega() > delta1_ && !force_pred) {
        CorrectorResult c = corrector_step(*cur);
        if (c.no_op) {
          // as central as rounding allows; run the predictor instead
          force_pred = true;
          continue;
        }
        cur = std::move(c.it);
        ++iter;
        record('C', c.alpha2);
        continue;
      }
      force_pred = false;

      PredictorResult p = predictor_step(*cur);
      cur = std::move(p.it);
      ++iter;
      record('P', p.alpha2);
    }

    if (!terminal) {
      probe = determine_status(*cur, 1e6 * tau_ref);
      terminal = probe.status ? probe.status : Status::kIterLimit;
      if (!probe.status) probe.message = "iteration budget exhausted";
    }
    report.status = *terminal;
    report.certificate = std::move(probe.certificate);
    report.ray = std::move(probe.ray);
    report.message = std::move(probe.message);
  } catch (const NumericalError& e) {
    report.status = Status::kNumericalFailure;
    report.message = e.what();
  } catch (const DomainError& e) {
    report.status = Status::kNumericalFailure;
    report.message = e.what();
  } catch (const DualInteriorError& e) {
    report.status = Status::kNumericalFailure;
    report.message = e.what();
  }

  report.iterations = iter;
  if (cur) fill_report(report, *cur);
  return report;
}

}  // namespace ddipm
