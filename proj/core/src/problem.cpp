// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/problem.hpp"

#include <Eigen/SVD>
#include <sstream>

#include "ddipm/errors.hpp"

namespace ddipm {

DomainDrivenProblem::DomainDrivenProblem(
    Eigen::MatrixXd a, Eigen::VectorXd c,
    std::shared_ptr<const DirectSumBarrier> barrier,
    std::optional<Eigen::VectorXd> z0)
    : a_(std::move(a)), c_(std::move(c)), barrier_(std::move(barrier)) {
  if (!barrier_) throw ValidationError("problem: barrier is null");
  if (a_.rows() != barrier_->dim())
    throw ValidationError("problem: A has " + std::to_string(a_.rows()) +
                          " rows but the barrier expects " +
                          std::to_string(barrier_->dim()));
  if (a_.cols() != c_.size())
    throw ValidationError("problem: objective length does not match columns of A");
  if (a_.cols() < 1) throw ValidationError("problem: no variables");
  if (z0) {
    if (z0->size() != a_.rows())
      throw ValidationError("problem: z0 length does not match rows of A");
    z0_ = std::move(*z0);
  } else {
    z0_ = barrier_->cold_start();
    z0_synthesized_ = true;
  }
}

ValidationReport DomainDrivenProblem::validate() const {
  ValidationReport rep;
  if (num_rows() < num_vars()) {
    rep.ok = false;
    rep.issues.push_back("A must have at least as many rows as columns (" +
                         std::to_string(num_rows()) + " x " +
                         std::to_string(num_vars()) + ")");
  }
  if (!a_.allFinite() || !c_.allFinite() || !z0_.allFinite()) {
    rep.ok = false;
    rep.issues.push_back("problem data contains non-finite entries");
    return rep;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a_, Eigen::ComputeThinV);
  rep.sigma_max = svd.singularValues()(0);
  rep.sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
  if (!(rep.sigma_min > 1e-10 * rep.sigma_max)) {
    rep.ok = false;
    // The right singular vector of the smallest singular value names the
    // dependent columns.
    const Eigen::VectorXd v =
        svd.matrixV().col(svd.matrixV().cols() - 1).cwiseAbs();
    const double vmax = v.maxCoeff();
    std::ostringstream os;
    os << "A is column rank deficient (sigma_min/sigma_max = "
       << rep.sigma_min / rep.sigma_max << "); dependent columns:";
    for (int i = 0; i < v.size(); ++i)
      if (v(i) > 1e-6 * vmax) os << ' ' << i;
    rep.issues.push_back(os.str());
  }

  const DirectSumBarrier& bar = *barrier_;
  for (int i = 0; i < bar.block_count(); ++i) {
    const Eigen::VectorXd zi =
        z0_.segment(bar.block_offset(i), bar.block(i).dim());
    if (!bar.block(i).contains(zi)) {
      rep.ok = false;
      rep.issues.push_back("z0 is not strictly interior in block " +
                           std::to_string(i) + " (" + bar.block(i).kind() +
                           ")");
    }
  }
  return rep;
}

}  // namespace ddipm
