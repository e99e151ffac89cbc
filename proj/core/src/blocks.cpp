// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/blocks.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "ddipm/errors.hpp"
#include "ddipm/scfun.hpp"

namespace ddipm {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

void check_dim(const Eigen::VectorXd& u, int d, const char* who) {
  if (u.size() != d) throw Error(std::string(who) + ": dimension mismatch");
}
}  // namespace

// ---------------------------------------------------------------------------
// LinearBlock: D = { z <= beta }, Phi = -ln(beta - z).

bool LinearBlock::contains(const Eigen::VectorXd& u) const {
  check_dim(u, 1, "LinearBlock");
  return std::isfinite(u(0)) && u(0) < beta_;
}

double LinearBlock::interior_margin(const Eigen::VectorXd& u) const {
  check_dim(u, 1, "LinearBlock");
  return beta_ - u(0);
}

bool LinearBlock::dual_contains(const Eigen::VectorXd& y) const {
  check_dim(y, 1, "LinearBlock");
  return std::isfinite(y(0)) && y(0) > 0.0;
}

double LinearBlock::value(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("LinearBlock: point not interior");
  return -std::log(beta_ - u(0));
}

Eigen::VectorXd LinearBlock::gradient(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("LinearBlock: point not interior");
  return Eigen::VectorXd::Constant(1, 1.0 / (beta_ - u(0)));
}

Eigen::MatrixXd LinearBlock::hessian(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("LinearBlock: point not interior");
  const double a = beta_ - u(0);
  return Eigen::MatrixXd::Constant(1, 1, 1.0 / (a * a));
}

Eigen::VectorXd LinearBlock::cold_start() const {
  return Eigen::VectorXd::Constant(1, beta_ - 1.0);
}

ConjugateResult LinearBlock::conjugate(
    const Eigen::VectorXd& y, const std::optional<Eigen::VectorXd>& warm) const {
  check_dim(y, 1, "LinearBlock");
  if (!(y(0) > 0.0) || !std::isfinite(y(0)))
    throw DualInteriorError("LinearBlock: conjugate requires y > 0");
  ConjugateResult out;
  out.u_star = Eigen::VectorXd::Constant(1, beta_ - 1.0 / y(0));
  out.value = beta_ * y(0) - 1.0 - std::log(y(0));
  out.warm_start_used = warm.has_value();
  return out;
}

double LinearBlock::conjugate_pair_gap(const Eigen::VectorXd& u,
                                       const Eigen::VectorXd& y,
                                       const Eigen::VectorXd& /*u_star*/) const {
  // Phi(u) + Phi*(y) - y u = g - ln(1 + g) with g = y (beta - u) - 1.
  return scfun::rho(std::fma(y(0), beta_ - u(0), -1.0));
}

// ---------------------------------------------------------------------------
// SocpBlock: D = { (z,t) : |z| <= t }, Phi = -ln(t^2 - z'z).

SocpBlock::SocpBlock(int n) : n_(n) {
  if (n < 1) throw Error("SocpBlock: cone dimension must be >= 1");
}

bool SocpBlock::contains(const Eigen::VectorXd& u) const {
  check_dim(u, n_ + 1, "SocpBlock");
  if (!u.allFinite()) return false;
  const double t = u(n_);
  return t > 0.0 && t * t - u.head(n_).squaredNorm() > 0.0;
}

double SocpBlock::interior_margin(const Eigen::VectorXd& u) const {
  check_dim(u, n_ + 1, "SocpBlock");
  return u(n_) - u.head(n_).norm();
}

bool SocpBlock::dual_contains(const Eigen::VectorXd& y) const {
  check_dim(y, n_ + 1, "SocpBlock");
  if (!y.allFinite()) return false;
  const double s = y(n_);
  return s < 0.0 && s * s - y.head(n_).squaredNorm() > 0.0;
}

double SocpBlock::value(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("SocpBlock: point not interior");
  const double t = u(n_);
  return -std::log(t * t - u.head(n_).squaredNorm());
}

Eigen::VectorXd SocpBlock::gradient(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("SocpBlock: point not interior");
  const double t = u(n_);
  const double s = t * t - u.head(n_).squaredNorm();
  Eigen::VectorXd g(n_ + 1);
  g.head(n_) = 2.0 * u.head(n_) / s;
  g(n_) = -2.0 * t / s;
  return g;
}

Eigen::MatrixXd SocpBlock::hessian(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("SocpBlock: point not interior");
  const double t = u(n_);
  const Eigen::VectorXd z = u.head(n_);
  const double s = t * t - z.squaredNorm();
  Eigen::MatrixXd h(n_ + 1, n_ + 1);
  h.topLeftCorner(n_, n_) =
      (2.0 / s) * Eigen::MatrixXd::Identity(n_, n_) +
      (4.0 / (s * s)) * z * z.transpose();
  h.block(0, n_, n_, 1) = -4.0 * t / (s * s) * z;
  h.block(n_, 0, 1, n_) = h.block(0, n_, n_, 1).transpose();
  h(n_, n_) = -2.0 / s + 4.0 * t * t / (s * s);
  return h;
}

// Rank-one-plus-diagonal split (ds/s)^2 + 2 (|d_z|^2 - d_t^2) / s with
// ds = <grad s, d>.  Near the boundary both terms stay O(|d|^2 / s^2) while
// the entries of hessian(u) cancel against each other; the split keeps the
// digits the materialized form loses.
double SocpBlock::hessian_quad(const Eigen::VectorXd& u,
                               const Eigen::VectorXd& d) const {
  if (!contains(u)) throw DomainError("SocpBlock: point not interior");
  check_dim(d, n_ + 1, "SocpBlock");
  const double t = u(n_);
  const Eigen::VectorXd z = u.head(n_);
  const double s = t * t - z.squaredNorm();
  const double ds = 2.0 * (t * d(n_) - z.dot(d.head(n_)));
  return (ds / s) * (ds / s) +
         2.0 * (d.head(n_).squaredNorm() - d(n_) * d(n_)) / s;
}

Eigen::VectorXd SocpBlock::cold_start() const {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n_ + 1);
  u(n_) = 1.0;
  return u;
}

ConjugateResult SocpBlock::conjugate(
    const Eigen::VectorXd& y, const std::optional<Eigen::VectorXd>& warm) const {
  check_dim(y, n_ + 1, "SocpBlock");
  const double s = y(n_);
  const double q = s * s - y.head(n_).squaredNorm();
  if (!(s < 0.0) || !(q > 0.0) || !y.allFinite())
    throw DualInteriorError("SocpBlock: conjugate requires |y_z| < -y_t");
  ConjugateResult out;
  out.u_star.resize(n_ + 1);
  out.u_star.head(n_) = 2.0 * y.head(n_) / q;
  out.u_star(n_) = -2.0 * s / q;
  out.value = std::log(4.0) - 2.0 - std::log(q);
  out.warm_start_used = warm.has_value();
  return out;
}

// ---------------------------------------------------------------------------
// SdpBlock: D = { Z : Z <= B }, Phi = -ln det(B - Z), scaled svec coordinates.

SdpBlock::SdpBlock(Eigen::MatrixXd b) : n_(static_cast<int>(b.rows())), b_(std::move(b)) {
  if (n_ < 1 || b_.cols() != n_) throw Error("SdpBlock: B must be square");
  if (!b_.isApprox(b_.transpose(), 1e-12))
    throw Error("SdpBlock: B must be symmetric");
  b_ = 0.5 * (b_ + b_.transpose().eval());
}

Eigen::VectorXd SdpBlock::svec(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  Eigen::VectorXd v(n * (n + 1) / 2);
  int k = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i)
      v(k++) = (i == j) ? m(i, j) : kSqrt2 * 0.5 * (m(i, j) + m(j, i));
  return v;
}

Eigen::MatrixXd SdpBlock::smat(const Eigen::VectorXd& v) {
  const int d = static_cast<int>(v.size());
  const int n = static_cast<int>(std::round((std::sqrt(8.0 * d + 1.0) - 1.0) / 2.0));
  Eigen::MatrixXd m(n, n);
  int k = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) {
      m(i, j) = (i == j) ? v(k) : v(k) / kSqrt2;
      m(j, i) = m(i, j);
      ++k;
    }
  return m;
}

bool SdpBlock::contains(const Eigen::VectorXd& u) const {
  check_dim(u, dim(), "SdpBlock");
  if (!u.allFinite()) return false;
  Eigen::LLT<Eigen::MatrixXd> llt(b_ - smat(u));
  return llt.info() == Eigen::Success;
}

double SdpBlock::interior_margin(const Eigen::VectorXd& u) const {
  check_dim(u, dim(), "SdpBlock");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b_ - smat(u),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool SdpBlock::dual_contains(const Eigen::VectorXd& y) const {
  check_dim(y, dim(), "SdpBlock");
  if (!y.allFinite()) return false;
  Eigen::LLT<Eigen::MatrixXd> llt(smat(y));
  return llt.info() == Eigen::Success;
}

double SdpBlock::value(const Eigen::VectorXd& u) const {
  Eigen::LLT<Eigen::MatrixXd> llt(b_ - smat(u));
  if (llt.info() != Eigen::Success)
    throw DomainError("SdpBlock: point not interior");
  return -2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

Eigen::VectorXd SdpBlock::gradient(const Eigen::VectorXd& u) const {
  Eigen::LLT<Eigen::MatrixXd> llt(b_ - smat(u));
  if (llt.info() != Eigen::Success)
    throw DomainError("SdpBlock: point not interior");
  return svec(llt.solve(Eigen::MatrixXd::Identity(n_, n_)));
}

Eigen::MatrixXd SdpBlock::hessian(const Eigen::VectorXd& u) const {
  Eigen::LLT<Eigen::MatrixXd> llt(b_ - smat(u));
  if (llt.info() != Eigen::Success)
    throw DomainError("SdpBlock: point not interior");
  const Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(n_, n_));
  // Column (i,j) of the Hessian is svec(W E_ij W) for the svec basis matrix
  // E_ij; this is the symmetric Kronecker product of W with itself.
  Eigen::MatrixXd h(dim(), dim());
  int k = 0;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i <= j; ++i) {
      Eigen::MatrixXd m;
      if (i == j)
        m = w.col(i) * w.col(i).transpose();
      else
        m = (w.col(i) * w.col(j).transpose() +
             w.col(j) * w.col(i).transpose()) / kSqrt2;
      h.col(k++) = svec(m);
    }
  return 0.5 * (h + h.transpose().eval());
}

// tr(M^{-1} D M^{-1} D) = |L^{-1} D L^{-T}|_F^2 for M = L L^T: a sum of
// squares, so no cancellation even when M is nearly singular.
double SdpBlock::hessian_quad(const Eigen::VectorXd& u,
                              const Eigen::VectorXd& d) const {
  check_dim(d, dim(), "SdpBlock");
  Eigen::LLT<Eigen::MatrixXd> llt(b_ - smat(u));
  if (llt.info() != Eigen::Success)
    throw DomainError("SdpBlock: point not interior");
  const Eigen::MatrixXd half = llt.matrixL().solve(smat(d));
  const Eigen::MatrixXd inner =
      llt.matrixL().solve(half.transpose().eval());
  return inner.squaredNorm();
}

Eigen::VectorXd SdpBlock::cold_start() const {
  return svec(b_ - Eigen::MatrixXd::Identity(n_, n_));
}

ConjugateResult SdpBlock::conjugate(
    const Eigen::VectorXd& y, const std::optional<Eigen::VectorXd>& warm) const {
  check_dim(y, dim(), "SdpBlock");
  Eigen::LLT<Eigen::MatrixXd> llt(smat(y));
  if (llt.info() != Eigen::Success || !y.allFinite())
    throw DualInteriorError("SdpBlock: conjugate requires Y positive definite");
  const Eigen::MatrixXd yinv = llt.solve(Eigen::MatrixXd::Identity(n_, n_));
  ConjugateResult out;
  out.u_star = svec(b_ - yinv);
  const double logdet =
      2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  out.value = svec(b_).dot(y) - n_ - logdet;
  out.warm_start_used = warm.has_value();
  return out;
}

// ---------------------------------------------------------------------------
// ExpBlock: D = cl{ (z,t) : exp(z) <= t }, Phi = -ln(ln t - z) - ln t.

bool ExpBlock::contains(const Eigen::VectorXd& u) const {
  check_dim(u, 2, "ExpBlock");
  if (!u.allFinite()) return false;
  return u(1) > 0.0 && std::log(u(1)) > u(0);
}

double ExpBlock::interior_margin(const Eigen::VectorXd& u) const {
  check_dim(u, 2, "ExpBlock");
  if (!(u(1) > 0.0)) return u(1);
  return std::min(u(1), std::log(u(1)) - u(0));
}

bool ExpBlock::dual_contains(const Eigen::VectorXd& y) const {
  check_dim(y, 2, "ExpBlock");
  if (!y.allFinite() || !(y(0) > 0.0) || !(y(1) < 0.0)) return false;
  return BarrierOracle::dual_contains(y);
}

double ExpBlock::value(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("ExpBlock: point not interior");
  const double t = u(1);
  return -std::log(std::log(t) - u(0)) - std::log(t);
}

Eigen::VectorXd ExpBlock::gradient(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("ExpBlock: point not interior");
  const double t = u(1);
  const double w = std::log(t) - u(0);
  Eigen::VectorXd g(2);
  g(0) = 1.0 / w;
  g(1) = -(1.0 / w + 1.0) / t;
  return g;
}

Eigen::MatrixXd ExpBlock::hessian(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("ExpBlock: point not interior");
  const double t = u(1);
  const double w = std::log(t) - u(0);
  Eigen::MatrixXd h(2, 2);
  h(0, 0) = 1.0 / (w * w);
  h(0, 1) = h(1, 0) = -1.0 / (w * w * t);
  h(1, 1) = (1.0 + w) / (w * w * t * t) + 1.0 / (t * t);
  return h;
}

// ((dw/w))^2 + (d_t/t)^2 (1/w + 1) with dw = <grad(ln t - z), d>; every term
// is a square, so the form survives small w intact.
double ExpBlock::hessian_quad(const Eigen::VectorXd& u,
                              const Eigen::VectorXd& d) const {
  if (!contains(u)) throw DomainError("ExpBlock: point not interior");
  check_dim(d, 2, "ExpBlock");
  const double t = u(1);
  const double w = std::log(t) - u(0);
  const double dw = d(1) / t - d(0);
  const double dt = d(1) / t;
  return (dw / w) * (dw / w) + dt * dt * (1.0 / w + 1.0);
}

Eigen::VectorXd ExpBlock::cold_start() const {
  Eigen::VectorXd u(2);
  u << 0.0, std::exp(1.0);
  return u;
}

// ---------------------------------------------------------------------------
// EntropyBlock: D = cl{ (z,t) : z ln z <= t, z > 0 },
// Phi = -ln(t - z ln z) - ln z.

bool EntropyBlock::contains(const Eigen::VectorXd& u) const {
  check_dim(u, 2, "EntropyBlock");
  if (!u.allFinite()) return false;
  return u(0) > 0.0 && u(1) - u(0) * std::log(u(0)) > 0.0;
}

double EntropyBlock::interior_margin(const Eigen::VectorXd& u) const {
  check_dim(u, 2, "EntropyBlock");
  if (!(u(0) > 0.0)) return u(0);
  return std::min(u(0), u(1) - u(0) * std::log(u(0)));
}

bool EntropyBlock::dual_contains(const Eigen::VectorXd& y) const {
  check_dim(y, 2, "EntropyBlock");
  if (!y.allFinite() || !(y(1) < 0.0)) return false;
  return BarrierOracle::dual_contains(y);
}

double EntropyBlock::value(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("EntropyBlock: point not interior");
  const double z = u(0);
  return -std::log(u(1) - z * std::log(z)) - std::log(z);
}

Eigen::VectorXd EntropyBlock::gradient(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("EntropyBlock: point not interior");
  const double z = u(0);
  const double lz = std::log(z);
  const double w = u(1) - z * lz;
  Eigen::VectorXd g(2);
  g(0) = (lz + 1.0) / w - 1.0 / z;
  g(1) = -1.0 / w;
  return g;
}

Eigen::MatrixXd EntropyBlock::hessian(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("EntropyBlock: point not interior");
  const double z = u(0);
  const double lz = std::log(z);
  const double w = u(1) - z * lz;
  Eigen::MatrixXd h(2, 2);
  h(0, 0) = (w / z + (lz + 1.0) * (lz + 1.0)) / (w * w) + 1.0 / (z * z);
  h(0, 1) = h(1, 0) = -(lz + 1.0) / (w * w);
  h(1, 1) = 1.0 / (w * w);
  return h;
}

// (dw/w)^2 + d_z^2 / (w z) + (d_z/z)^2 with dw = <grad(t - z ln z), d>; all
// terms nonnegative, no cancellation near the boundary.
double EntropyBlock::hessian_quad(const Eigen::VectorXd& u,
                                  const Eigen::VectorXd& d) const {
  if (!contains(u)) throw DomainError("EntropyBlock: point not interior");
  check_dim(d, 2, "EntropyBlock");
  const double z = u(0);
  const double lz = std::log(z);
  const double w = u(1) - z * lz;
  const double dw = d(1) - (lz + 1.0) * d(0);
  return (dw / w) * (dw / w) + d(0) * d(0) / (w * z) +
         (d(0) / z) * (d(0) / z);
}

Eigen::VectorXd EntropyBlock::cold_start() const {
  Eigen::VectorXd u(2);
  u << 1.0, 1.0;
  return u;
}

// ---------------------------------------------------------------------------
// PowerBlock: D = cl{ (z,t) : |z|^p <= t }, Phi = -ln(t^{2/p} - z^2) - 2 ln t.

PowerBlock::PowerBlock(double p) : p_(p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw Error("PowerBlock: exponent must satisfy p >= 1");
}

bool PowerBlock::contains(const Eigen::VectorXd& u) const {
  check_dim(u, 2, "PowerBlock");
  if (!u.allFinite()) return false;
  const double t = u(1);
  return t > 0.0 && std::pow(t, 2.0 / p_) - u(0) * u(0) > 0.0;
}

double PowerBlock::interior_margin(const Eigen::VectorXd& u) const {
  check_dim(u, 2, "PowerBlock");
  if (!(u(1) > 0.0)) return u(1);
  return std::min(u(1), std::pow(u(1), 2.0 / p_) - u(0) * u(0));
}

bool PowerBlock::dual_contains(const Eigen::VectorXd& y) const {
  check_dim(y, 2, "PowerBlock");
  if (!y.allFinite() || !(y(1) < 0.0)) return false;
  // p = 1 is the cone |z| <= t with polar interior |y_z| < -y_t.
  if (p_ == 1.0 && !(std::abs(y(0)) < -y(1))) return false;
  return BarrierOracle::dual_contains(y);
}

double PowerBlock::value(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("PowerBlock: point not interior");
  const double t = u(1);
  return -std::log(std::pow(t, 2.0 / p_) - u(0) * u(0)) - 2.0 * std::log(t);
}

Eigen::VectorXd PowerBlock::gradient(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("PowerBlock: point not interior");
  const double a = 2.0 / p_;
  const double z = u(0), t = u(1);
  const double w = std::pow(t, a) - z * z;
  Eigen::VectorXd g(2);
  g(0) = 2.0 * z / w;
  g(1) = -a * std::pow(t, a - 1.0) / w - 2.0 / t;
  return g;
}

Eigen::MatrixXd PowerBlock::hessian(const Eigen::VectorXd& u) const {
  if (!contains(u)) throw DomainError("PowerBlock: point not interior");
  const double a = 2.0 / p_;
  const double z = u(0), t = u(1);
  const double ta = std::pow(t, a);
  const double ta1 = std::pow(t, a - 1.0);
  const double w = ta - z * z;
  Eigen::MatrixXd h(2, 2);
  h(0, 0) = 2.0 / w + 4.0 * z * z / (w * w);
  h(0, 1) = h(1, 0) = -2.0 * z * a * ta1 / (w * w);
  h(1, 1) = -a * (a - 1.0) * std::pow(t, a - 2.0) / w +
            a * a * ta1 * ta1 / (w * w) + 2.0 / (t * t);
  return h;
}

// (dw/w)^2 plus curvature-of-w and -ln t terms, with dw = <grad w, d>.  For
// p >= 2 every term is nonnegative; for p < 2 the lone negative term is
// bounded by the others, so no digits are lost near the boundary.
double PowerBlock::hessian_quad(const Eigen::VectorXd& u,
                                const Eigen::VectorXd& d) const {
  if (!contains(u)) throw DomainError("PowerBlock: point not interior");
  check_dim(d, 2, "PowerBlock");
  const double a = 2.0 / p_;
  const double z = u(0), t = u(1);
  const double ta1 = std::pow(t, a - 1.0);
  const double w = std::pow(t, a) - z * z;
  const double dw = a * ta1 * d(1) - 2.0 * z * d(0);
  return (dw / w) * (dw / w) + 2.0 * d(0) * d(0) / w -
         a * (a - 1.0) * std::pow(t, a - 2.0) * d(1) * d(1) / w +
         2.0 * (d(1) / t) * (d(1) / t);
}

Eigen::VectorXd PowerBlock::cold_start() const {
  Eigen::VectorXd u(2);
  u << 0.0, 1.0;
  return u;
}

}  // namespace ddipm
