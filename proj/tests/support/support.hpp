// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_TESTS_SUPPORT_HPP_
#define DDIPM_TESTS_SUPPORT_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ddipm/kkt.hpp"
#include "ddipm/path.hpp"
#include "ddipm/problem.hpp"

namespace ddipm::testing {

using Rng = std::mt19937_64;

// Strictly interior primal point of one block (by kind) or a whole direct
// sum, sampled with healthy margins.
Eigen::VectorXd interior_point(const BarrierOracle& block, Rng& rng);
Eigen::VectorXd interior_point(const DirectSumBarrier& barrier, Rng& rng);

// Strictly interior dual point (rejection sampling on dual_contains for the
// curved blocks).
Eigen::VectorXd dual_interior_point(const BarrierOracle& block, Rng& rng);
Eigen::VectorXd dual_interior_point(const DirectSumBarrier& barrier, Rng& rng);

// Step parameter for the central-difference harness at u.  The harness scales
// its probe spacing by (1 + max|u_i|); this normalizes that away and ties the
// spacing to the interior margin, the curvature scale of the barrier, so the
// truncation error stays below the comparison tolerances at every sample.
double fd_step(const BarrierOracle& block, const Eigen::VectorXd& u,
               double h0);

// Random member of the working set around the canonical start: tau jittered,
// x jittered inside the domain, y = y0 - (tau-1) c_a - f' v for random v, all
// shrunk toward the start until the point validates.
std::optional<Iterate> random_qdd_iterate(const DomainDrivenProblem& problem,
                                          const KktContext& ctx, double xi,
                                          Rng& rng, double jitter = 0.5);

// Dense LP  min c'x  s.t.  g x <= h  with strictly feasible origin (h > 0)
// and box rows |x_j| <= 10 keeping it bounded; m = extra_rows + 2n.
struct RandomLp {
  DomainDrivenProblem problem;  // domain-driven encoding (LinearBlock rows)
  Eigen::MatrixXd g;
  Eigen::VectorXd h;
  Eigen::VectorXd c;
};
RandomLp random_boxed_lp(int n, int extra_rows, Rng& rng);

struct LpSolution {
  bool feasible = true;
  bool bounded = true;
  double value = 0.0;
  Eigen::VectorXd x;
};

// Primal simplex with Bland's rule on  min c'x  s.t.  g x <= h, x free,
// h > 0 (slack basis start).  Independent of the interior-point code.
LpSolution simplex_solve(const Eigen::MatrixXd& g, const Eigen::VectorXd& h,
                         const Eigen::VectorXd& c);

// Exhaustive vertex enumeration for small LPs; cross-checks the simplex.
LpSolution vertex_enumerate(const Eigen::MatrixXd& g, const Eigen::VectorXd& h,
                            const Eigen::VectorXd& c);

// Support function of a product of half lines sum_i beta_i y_i (y >= 0), the
// closed form used to check gap bounds on LP instances.
double lp_support(const Eigen::VectorXd& beta, const Eigen::VectorXd& y);

// Small named instances with hand-checked optima.
struct DeskEntry {
  std::string name;
  DomainDrivenProblem problem;
  std::optional<double> optimal;
};

DomainDrivenProblem desk_lp1();           // min -x  s.t. x <= 1        (-1)
DomainDrivenProblem desk_lp2();           // 2-var LP with box rows     (-3.5)
DomainDrivenProblem desk_lp_infeasible(); // x <= 0 and x >= 1
DomainDrivenProblem desk_lp_unbounded();  // min -x  s.t. x >= 0
DomainDrivenProblem desk_exp();           // min t s.t. e^x <= t, x >= 1 (e)
DomainDrivenProblem desk_entropy();  // min t s.t. z ln z <= t, z in [.3,.4]
DomainDrivenProblem desk_socp();     // min t s.t. |w|_2 <= t           (0)
DomainDrivenProblem desk_power();    // min t s.t. |z|^3 <= t, z >= 2   (8)
DomainDrivenProblem desk_sdp();      // min -x s.t. x I <= diag(1,2)    (-1)
DomainDrivenProblem desk_mixed();    // linear + socp coupling      (-2-sqrt5)

// The feasible catalog above, with optima, for sweep-style tests.
std::vector<DeskEntry> desk_catalog();

}  // namespace ddipm::testing

#endif  // DDIPM_TESTS_SUPPORT_HPP_
