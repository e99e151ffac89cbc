// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_DIRECT_SUM_HPP_
#define DDIPM_DIRECT_SUM_HPP_

#include <memory>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "ddipm/barrier.hpp"

namespace ddipm {

// Direct sum of barrier blocks: Phi(u) = sum_i Phi_i(u_i) on the product
// domain, theta = sum_i theta_i.  Rows are assigned to blocks in order.
class DirectSumBarrier final : public BarrierOracle {
 public:
  explicit DirectSumBarrier(
      std::vector<std::shared_ptr<const BarrierOracle>> blocks);

  int dim() const override { return dim_; }
  double theta() const override { return theta_; }
  std::string kind() const override { return "direct_sum"; }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const BarrierOracle& block(int i) const { return *blocks_[i]; }
  std::shared_ptr<const BarrierOracle> block_ptr(int i) const {
    return blocks_[i];
  }
  int block_offset(int i) const { return offsets_[i]; }
  // Index of the block owning the row with the smallest interior margin.
  int worst_margin_block(const Eigen::VectorXd& u) const;

  bool contains(const Eigen::VectorXd& u) const override;
  double interior_margin(const Eigen::VectorXd& u) const override;
  bool dual_contains(const Eigen::VectorXd& y) const override;
  double value(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd cold_start() const override;
  ConjugateResult conjugate(
      const Eigen::VectorXd& y,
      const std::optional<Eigen::VectorXd>& warm = std::nullopt) const override;
  double conjugate_pair_gap(const Eigen::VectorXd& u, const Eigen::VectorXd& y,
                            const Eigen::VectorXd& u_star) const override;

  // <d, hessian(u) d> evaluated blockwise without forming the dense matrix.
  double hessian_quad(const Eigen::VectorXd& u,
                      const Eigen::VectorXd& d) const override;

 private:
  std::vector<std::shared_ptr<const BarrierOracle>> blocks_;
  std::vector<int> offsets_;
  int dim_ = 0;
  double theta_ = 0.0;
};

// Cholesky factors of the block-diagonal Hessian of a direct sum at a fixed
// point; applies Phi''(u) and its inverse without assembling an m x m matrix.
class BlockHessian {
 public:
  BlockHessian(const DirectSumBarrier& barrier, const Eigen::VectorXd& u);

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
  Eigen::VectorXd solve(const Eigen::VectorXd& v) const;
  Eigen::MatrixXd apply(const Eigen::MatrixXd& m) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& m) const;
  double quad(const Eigen::VectorXd& v) const;      // <v, Phi'' v>
  double inv_quad(const Eigen::VectorXd& v) const;  // <v, Phi''^{-1} v>
  int dim() const { return dim_; }

 private:
  std::vector<Eigen::MatrixXd> hess_;
  std::vector<Eigen::LLT<Eigen::MatrixXd>> llt_;
  std::vector<int> offsets_;
  std::vector<int> dims_;
  int dim_ = 0;
};

}  // namespace ddipm

#endif  // DDIPM_DIRECT_SUM_HPP_
