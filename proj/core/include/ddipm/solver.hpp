// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_SOLVER_HPP_
#define DDIPM_SOLVER_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ddipm/kkt.hpp"
#include "ddipm/path.hpp"
#include "ddipm/problem.hpp"

namespace ddipm {

enum class Status {
  kOptimal,           // certified gap and feasibility tolerances met
  kInfeasible,        // separating certificate found
  kUnbounded,         // mu diverged with bounded tau and unbounded objective
  kMuLimit,           // mu hit its ceiling without a certificate
  kIterLimit,         // iteration budget exhausted
  kNumericalFailure,  // a step or factorization broke down
};

const char* to_string(Status status);

struct Settings {
  double xi = 2.0;      // path widening parameter, must exceed 1
  double delta1 = 0.05;  // corrector entry threshold on the proximity
  double delta2 = 0.5;   // predictor exit threshold on the proximity
  double eps_gap = 1e-8;
  double eps_feas = 1e-8;
  double eps_cert = 1e-8;
  int max_iter = 500;
  double mu_max = 1e12;
  // Replaces delta1/delta2 with the worst-case theory values derived from xi
  // and pins the corrector step length to its guaranteed value.
  bool strict = false;

  void validate() const;  // throws ValidationError on bad combinations
};

// Step-size and neighborhood constants of the worst-case analysis, derived
// from xi alone.
struct TheoryConstants {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
  double xi4 = 0.0;
  double corrector_alpha2 = 0.0;  // guaranteed corrector step
  double delta1 = 0.0;
  double delta2 = 0.0;

  static TheoryConstants from_xi(double xi);
};

struct TraceRecord {
  int iter = 0;
  char phase = 'I';  // 'I' initial point, 'P' predictor, 'C' corrector
  double mu = 0.0;
  double omega = 0.0;
  double tau = 0.0;
  double alpha2 = 0.0;
  double gap_lo = 0.0;
  double gap_hi = 0.0;
};

// Infeasibility evidence: a normalized dual ray y_bar with A' y_bar ~ 0 and
// a certified negative upper bound on the support function of D at y_bar.
struct Certificate {
  Eigen::VectorXd y_bar;
  double aty_inf = 0.0;
  double support_lower = 0.0;
  double support_upper = 0.0;
  double k_used = 0.0;
};

struct SolveReport {
  Status status = Status::kNumericalFailure;
  int iterations = 0;
  double mu = 0.0;
  double tau = 0.0;
  double omega = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd y_scaled;  // y / tau, the dual side of the gap bounds
  double objective = 0.0;    // <c, x>
  GapBounds gap;
  double primal_feas = 0.0;  // 1 / tau; the constraint shift is z0 / tau
  std::optional<Certificate> certificate;
  std::optional<Eigen::VectorXd> ray;  // scaled improving direction
  std::vector<TraceRecord> trace;
  std::string message;
};

class Solver {
 public:
  explicit Solver(const DomainDrivenProblem& problem, Settings settings = {});

  const Settings& settings() const { return settings_; }
  const TheoryConstants& theory() const { return theory_; }
  const KktContext& context() const { return ctx_; }
  double delta1() const { return delta1_; }
  double delta2() const { return delta2_; }

  // The canonical starting point x = 0, tau = 1, y = Phi'(z0); it has
  // mu = 1 and sits exactly on the central path.
  Iterate initialize() const;

  struct PredictorResult {
    Iterate it;
    double alpha2 = 0.0;
    Direction dir;
  };
  // One mu-increasing step: solve with right-hand side r0/mu^2, cap the
  // length at the domain boundary (fraction 0.99) and at a bounded per-step
  // mu growth, then backtrack until the proximity stays within delta2.
  PredictorResult predictor_step(const Iterate& it) const;

  struct CorrectorResult {
    Iterate it;
    double alpha2 = 0.0;
    // The centering direction vanished to rounding: the point is already as
    // central as arithmetic allows, so no step was taken.
    bool no_op = false;
  };
  // One mu-preserving centering step toward the path (target omega < delta1
  // over repeated calls).
  CorrectorResult corrector_step(const Iterate& it) const;

  struct StatusProbe {
    std::optional<Status> status;  // empty while the run should continue
    std::optional<Certificate> certificate;
    std::optional<Eigen::VectorXd> ray;
    std::string message;
  };
  // Terminal-state test in the order optimal, infeasible, unbounded/mu-limit.
  StatusProbe determine_status(const Iterate& it, double tau_cap) const;

  SolveReport solve();

 private:
  void fill_report(SolveReport& report, const Iterate& it) const;

  const DomainDrivenProblem* problem_;
  Settings settings_;
  TheoryConstants theory_;
  double delta1_ = 0.0;  // effective thresholds (theory values when strict)
  double delta2_ = 0.0;
  KktContext ctx_;
};

}  // namespace ddipm

#endif  // DDIPM_SOLVER_HPP_
