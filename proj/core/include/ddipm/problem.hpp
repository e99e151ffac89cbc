// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_PROBLEM_HPP_
#define DDIPM_PROBLEM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ddipm/direct_sum.hpp"

namespace ddipm {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
  double sigma_min = 0.0;  // extreme singular values of A
  double sigma_max = 0.0;
};

// Conic-free convex problem in domain-driven form:
//   minimize <c, x>  subject to  A x in D,
// where D is the closure of the domain of the direct-sum barrier.  A is dense
// m x n with m >= n; z0 is a strictly interior point of D (synthesized
// blockwise when not supplied).  Instances are immutable.
class DomainDrivenProblem {
 public:
  DomainDrivenProblem(Eigen::MatrixXd a, Eigen::VectorXd c,
                      std::shared_ptr<const DirectSumBarrier> barrier,
                      std::optional<Eigen::VectorXd> z0 = std::nullopt);

  int num_vars() const { return static_cast<int>(a_.cols()); }
  int num_rows() const { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::VectorXd& c() const { return c_; }
  const DirectSumBarrier& barrier() const { return *barrier_; }
  std::shared_ptr<const DirectSumBarrier> barrier_ptr() const {
    return barrier_;
  }
  const Eigen::VectorXd& z0() const { return z0_; }
  bool z0_synthesized() const { return z0_synthesized_; }

  // Full column rank of A (threshold 1e-10 relative to the largest singular
  // value, naming dependent columns on failure) and strict interiority of z0
  // (naming the offending block).  Cheap shape checks run in the constructor;
  // this performs the expensive ones.
  ValidationReport validate() const;

 private:
  Eigen::MatrixXd a_;
  Eigen::VectorXd c_;
  std::shared_ptr<const DirectSumBarrier> barrier_;
  Eigen::VectorXd z0_;
  bool z0_synthesized_ = false;
};

// One term alpha * f(a'x + beta) of a liftable constraint.
enum class TermKind { kExp, kEntropy, kPower };

struct LiftedTerm {
  double alpha = 1.0;
  TermKind kind = TermKind::kExp;
  double power = 2.0;  // exponent p for kPower terms
  Eigen::VectorXd a;
  double beta = 0.0;
};

// sum_i alpha_i f_i(a_i'x + beta_i) + g'x + gamma <= 0.
struct LiftedConstraint {
  std::vector<LiftedTerm> terms;
  Eigen::VectorXd g;
  double gamma = 0.0;
};

// g'x + gamma <= 0, encoded as one LinearBlock row.
struct LinearRow {
  Eigen::VectorXd g;
  double gamma = 0.0;
};

// |P x|_2 <= r'x: k+1 rows (P x; r'x) into one SocpBlock of cone dimension k.
struct ConeRows {
  Eigen::MatrixXd p;
  Eigen::VectorXd r;
};

// Builds the domain-driven problem for
//   minimize <c_base, x>  subject to the given constraints,
// introducing one epigraph auxiliary per nonlinear term where needed.  A
// constraint with a single term and gamma = 0 folds directly into one
// epigraph block without an auxiliary; otherwise each term i gets u_i with
// f_i(a_i'x) <= u_i plus a linear coupling row.  Exponential terms absorb
// beta into the coupling coefficient (alpha e^beta); entropy and power terms
// require beta = 0.  Auxiliary columns are appended after the base variables
// with zero objective weight.  Throws ValidationError for alpha < 0 or a
// nonzero beta on a term kind that cannot absorb it.
DomainDrivenProblem lift(int base_vars, const Eigen::VectorXd& c_base,
                         const std::vector<LiftedConstraint>& constraints,
                         const std::vector<LinearRow>& linear_rows = {},
                         const std::vector<ConeRows>& cone_rows = {});

}  // namespace ddipm

#endif  // DDIPM_PROBLEM_HPP_
