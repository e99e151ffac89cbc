// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/direct_sum.hpp"

#include <cmath>

#include "ddipm/errors.hpp"

namespace ddipm {

DirectSumBarrier::DirectSumBarrier(
    std::vector<std::shared_ptr<const BarrierOracle>> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error("DirectSumBarrier: no blocks");
  offsets_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (!b) throw Error("DirectSumBarrier: null block");
    offsets_.push_back(dim_);
    dim_ += b->dim();
    theta_ += b->theta();
  }
}

int DirectSumBarrier::worst_margin_block(const Eigen::VectorXd& u) const {
  int worst = 0;
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < block_count(); ++i) {
    double m = blocks_[i]->interior_margin(u.segment(offsets_[i], blocks_[i]->dim()));
    if (m < margin) {
      margin = m;
      worst = i;
    }
  }
  return worst;
}

bool DirectSumBarrier::contains(const Eigen::VectorXd& u) const {
  if (u.size() != dim_) throw Error("DirectSumBarrier: dimension mismatch");
  for (int i = 0; i < block_count(); ++i)
    if (!blocks_[i]->contains(u.segment(offsets_[i], blocks_[i]->dim())))
      return false;
  return true;
}

double DirectSumBarrier::interior_margin(const Eigen::VectorXd& u) const {
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < block_count(); ++i)
    margin = std::min(margin, blocks_[i]->interior_margin(
                                  u.segment(offsets_[i], blocks_[i]->dim())));
  return margin;
}

bool DirectSumBarrier::dual_contains(const Eigen::VectorXd& y) const {
  if (y.size() != dim_) throw Error("DirectSumBarrier: dimension mismatch");
  for (int i = 0; i < block_count(); ++i)
    if (!blocks_[i]->dual_contains(y.segment(offsets_[i], blocks_[i]->dim())))
      return false;
  return true;
}

double DirectSumBarrier::value(const Eigen::VectorXd& u) const {
  double v = 0.0;
  for (int i = 0; i < block_count(); ++i)
    v += blocks_[i]->value(u.segment(offsets_[i], blocks_[i]->dim()));
  return v;
}

Eigen::VectorXd DirectSumBarrier::gradient(const Eigen::VectorXd& u) const {
  Eigen::VectorXd g(dim_);
  for (int i = 0; i < block_count(); ++i)
    g.segment(offsets_[i], blocks_[i]->dim()) =
        blocks_[i]->gradient(u.segment(offsets_[i], blocks_[i]->dim()));
  return g;
}

Eigen::MatrixXd DirectSumBarrier::hessian(const Eigen::VectorXd& u) const {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < block_count(); ++i) {
    const int d = blocks_[i]->dim();
    h.block(offsets_[i], offsets_[i], d, d) =
        blocks_[i]->hessian(u.segment(offsets_[i], d));
  }
  return h;
}

Eigen::VectorXd DirectSumBarrier::cold_start() const {
  Eigen::VectorXd u(dim_);
  for (int i = 0; i < block_count(); ++i)
    u.segment(offsets_[i], blocks_[i]->dim()) = blocks_[i]->cold_start();
  return u;
}

ConjugateResult DirectSumBarrier::conjugate(
    const Eigen::VectorXd& y, const std::optional<Eigen::VectorXd>& warm) const {
  if (y.size() != dim_) throw Error("DirectSumBarrier: dimension mismatch");
  ConjugateResult out;
  out.u_star.resize(dim_);
  out.warm_start_used = warm.has_value();
  for (int i = 0; i < block_count(); ++i) {
    const int d = blocks_[i]->dim();
    std::optional<Eigen::VectorXd> w;
    if (warm) w = warm->segment(offsets_[i], d);
    try {
      ConjugateResult part = blocks_[i]->conjugate(y.segment(offsets_[i], d), w);
      out.u_star.segment(offsets_[i], d) = part.u_star;
      out.value += part.value;
      out.warm_start_used = out.warm_start_used && part.warm_start_used;
    } catch (const DualInteriorError& e) {
      throw DualInteriorError(e.what(), i);
    }
  }
  return out;
}

double DirectSumBarrier::conjugate_pair_gap(const Eigen::VectorXd& u,
                                            const Eigen::VectorXd& y,
                                            const Eigen::VectorXd& u_star) const {
  double gap = 0.0;
  for (int i = 0; i < block_count(); ++i) {
    const int d = blocks_[i]->dim();
    gap += blocks_[i]->conjugate_pair_gap(u.segment(offsets_[i], d),
                                          y.segment(offsets_[i], d),
                                          u_star.segment(offsets_[i], d));
  }
  return gap;
}

double DirectSumBarrier::hessian_quad(const Eigen::VectorXd& u,
                                      const Eigen::VectorXd& d) const {
  double q = 0.0;
  for (int i = 0; i < block_count(); ++i) {
    const int bd = blocks_[i]->dim();
    q += blocks_[i]->hessian_quad(u.segment(offsets_[i], bd),
                                  d.segment(offsets_[i], bd));
  }
  return q;
}

BlockHessian::BlockHessian(const DirectSumBarrier& barrier,
                           const Eigen::VectorXd& u)
    : dim_(barrier.dim()) {
  const int nb = barrier.block_count();
  hess_.reserve(nb);
  llt_.reserve(nb);
  offsets_.reserve(nb);
  dims_.reserve(nb);
  for (int i = 0; i < nb; ++i) {
    const int d = barrier.block(i).dim();
    offsets_.push_back(barrier.block_offset(i));
    dims_.push_back(d);
    hess_.push_back(barrier.block(i).hessian(u.segment(offsets_[i], d)));
    llt_.emplace_back(hess_.back());
    if (llt_.back().info() != Eigen::Success)
      throw NumericalError("BlockHessian: block " + std::to_string(i) +
                           " is numerically indefinite");
  }
}

Eigen::VectorXd BlockHessian::apply(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out(dim_);
  for (size_t i = 0; i < hess_.size(); ++i)
    out.segment(offsets_[i], dims_[i]).noalias() =
        hess_[i] * v.segment(offsets_[i], dims_[i]);
  return out;
}

Eigen::VectorXd BlockHessian::solve(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out(dim_);
  for (size_t i = 0; i < hess_.size(); ++i)
    out.segment(offsets_[i], dims_[i]) =
        llt_[i].solve(v.segment(offsets_[i], dims_[i]));
  return out;
}

Eigen::MatrixXd BlockHessian::apply(const Eigen::MatrixXd& m) const {
  Eigen::MatrixXd out(dim_, m.cols());
  for (size_t i = 0; i < hess_.size(); ++i)
    out.middleRows(offsets_[i], dims_[i]).noalias() =
        hess_[i] * m.middleRows(offsets_[i], dims_[i]);
  return out;
}

Eigen::MatrixXd BlockHessian::solve(const Eigen::MatrixXd& m) const {
  Eigen::MatrixXd out(dim_, m.cols());
  for (size_t i = 0; i < hess_.size(); ++i)
    out.middleRows(offsets_[i], dims_[i]) =
        llt_[i].solve(m.middleRows(offsets_[i], dims_[i]));
  return out;
}

double BlockHessian::quad(const Eigen::VectorXd& v) const {
  double q = 0.0;
  for (size_t i = 0; i < hess_.size(); ++i) {
    const Eigen::VectorXd vi = v.segment(offsets_[i], dims_[i]);
    q += vi.dot(hess_[i] * vi);
  }
  return q;
}

double BlockHessian::inv_quad(const Eigen::VectorXd& v) const {
  double q = 0.0;
  for (size_t i = 0; i < hess_.size(); ++i) {
    const Eigen::VectorXd vi = v.segment(offsets_[i], dims_[i]);
    q += vi.dot(llt_[i].solve(vi));
  }
  return q;
}

}  // namespace ddipm
