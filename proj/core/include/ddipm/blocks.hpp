// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_BLOCKS_HPP_
#define DDIPM_BLOCKS_HPP_

#include <Eigen/Core>

#include "ddipm/barrier.hpp"

namespace ddipm {

// Half line D = { z <= beta }, barrier -ln(beta - z), theta = 1.
class LinearBlock final : public BarrierOracle {
 public:
  explicit LinearBlock(double beta) : beta_(beta) {}

  int dim() const override { return 1; }
  double theta() const override { return 1.0; }
  std::string kind() const override { return "linear"; }
  double beta() const { return beta_; }

  bool contains(const Eigen::VectorXd& u) const override;
  double interior_margin(const Eigen::VectorXd& u) const override;
  bool dual_contains(const Eigen::VectorXd& y) const override;
  double value(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd cold_start() const override;
  // Closed form: u* = beta - 1/y, Phi*(y) = beta*y - 1 - ln y.
  ConjugateResult conjugate(
      const Eigen::VectorXd& y,
      const std::optional<Eigen::VectorXd>& warm = std::nullopt) const override;
  // Exact rewrite Phi + Phi* - y u = rho(y*(beta-u) - 1); squares the
  // rounding noise, which matters when tau is large and the gap is tiny.
  double conjugate_pair_gap(const Eigen::VectorXd& u, const Eigen::VectorXd& y,
                            const Eigen::VectorXd& u_star) const override;

 private:
  double beta_;
};

// Second-order cone D = { (z, t) : |z|_2 <= t }, z in R^n.
// Barrier -ln(t^2 - z'z), theta = 2.  Layout: u = (z_1..z_n, t).
class SocpBlock final : public BarrierOracle {
 public:
  explicit SocpBlock(int n);

  int dim() const override { return n_ + 1; }
  double theta() const override { return 2.0; }
  std::string kind() const override { return "socp"; }
  int cone_dim() const { return n_; }

  bool contains(const Eigen::VectorXd& u) const override;
  double interior_margin(const Eigen::VectorXd& u) const override;
  bool dual_contains(const Eigen::VectorXd& y) const override;
  double value(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const override;
  double hessian_quad(const Eigen::VectorXd& u,
                      const Eigen::VectorXd& d) const override;
  Eigen::VectorXd cold_start() const override;
  // Closed form: Phi*(y) = ln 4 - 2 - ln(y_t^2 - |y_z|^2).
  ConjugateResult conjugate(
      const Eigen::VectorXd& y,
      const std::optional<Eigen::VectorXd>& warm = std::nullopt) const override;

 private:
  int n_;
};

// Linear matrix inequality D = { Z symmetric : Z <= B }, barrier
// -ln det(B - Z), theta = n.  Points use the scaled symmetric vectorization
// (off-diagonal entries times sqrt 2) so Euclidean inner products coincide
// with trace inner products; dim = n(n+1)/2.
class SdpBlock final : public BarrierOracle {
 public:
  explicit SdpBlock(Eigen::MatrixXd b);

  int dim() const override { return n_ * (n_ + 1) / 2; }
  double theta() const override { return static_cast<double>(n_); }
  std::string kind() const override { return "sdp"; }
  int matrix_dim() const { return n_; }
  const Eigen::MatrixXd& b() const { return b_; }

  bool contains(const Eigen::VectorXd& u) const override;
  double interior_margin(const Eigen::VectorXd& u) const override;
  bool dual_contains(const Eigen::VectorXd& y) const override;
  double value(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const override;
  double hessian_quad(const Eigen::VectorXd& u,
                      const Eigen::VectorXd& d) const override;
  Eigen::VectorXd cold_start() const override;
  // Closed form: u* = svec(B - Y^{-1}), Phi*(Y) = <B,Y> - n - ln det Y.
  ConjugateResult conjugate(
      const Eigen::VectorXd& y,
      const std::optional<Eigen::VectorXd>& warm = std::nullopt) const override;

  static Eigen::VectorXd svec(const Eigen::MatrixXd& m);
  static Eigen::MatrixXd smat(const Eigen::VectorXd& v);

 private:
  int n_;
  Eigen::MatrixXd b_;
};

// Exponential epigraph D = cl{ (z, t) : exp(z) <= t }, barrier
// -ln(ln t - z) - ln t, theta = 2.
class ExpBlock final : public BarrierOracle {
 public:
  int dim() const override { return 2; }
  double theta() const override { return 2.0; }
  std::string kind() const override { return "exp"; }

  bool contains(const Eigen::VectorXd& u) const override;
  double interior_margin(const Eigen::VectorXd& u) const override;
  bool dual_contains(const Eigen::VectorXd& y) const override;
  double value(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const override;
  double hessian_quad(const Eigen::VectorXd& u,
                      const Eigen::VectorXd& d) const override;
  Eigen::VectorXd cold_start() const override;
};

// Entropy epigraph D = cl{ (z, t) : z ln z <= t, z > 0 }, barrier
// -ln(t - z ln z) - ln z, theta = 2.
class EntropyBlock final : public BarrierOracle {
 public:
  int dim() const override { return 2; }
  double theta() const override { return 2.0; }
  std::string kind() const override { return "entropy"; }

  bool contains(const Eigen::VectorXd& u) const override;
  double interior_margin(const Eigen::VectorXd& u) const override;
  bool dual_contains(const Eigen::VectorXd& y) const override;
  double value(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const override;
  double hessian_quad(const Eigen::VectorXd& u,
                      const Eigen::VectorXd& d) const override;
  Eigen::VectorXd cold_start() const override;
};

// Power epigraph D = cl{ (z, t) : |z|^p <= t }, p >= 1, barrier
// -ln(t^{2/p} - z^2) - 2 ln t, theta = 4.
class PowerBlock final : public BarrierOracle {
 public:
  explicit PowerBlock(double p);

  int dim() const override { return 2; }
  double theta() const override { return 4.0; }
  std::string kind() const override { return "power"; }
  double p() const { return p_; }

  bool contains(const Eigen::VectorXd& u) const override;
  double interior_margin(const Eigen::VectorXd& u) const override;
  bool dual_contains(const Eigen::VectorXd& y) const override;
  double value(const Eigen::VectorXd& u) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& u) const override;
  double hessian_quad(const Eigen::VectorXd& u,
                      const Eigen::VectorXd& d) const override;
  Eigen::VectorXd cold_start() const override;

 private:
  double p_;
};

}  // namespace ddipm

#endif  // DDIPM_BLOCKS_HPP_
