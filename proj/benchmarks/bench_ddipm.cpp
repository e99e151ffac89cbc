// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include <memory>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ddipm/blocks.hpp"
#include "ddipm/direct_sum.hpp"
#include "ddipm/kkt.hpp"
#include "ddipm/path.hpp"
#include "ddipm/problem.hpp"
#include "ddipm/solver.hpp"

namespace {

using namespace ddipm;

// Bounded LP with a strictly feasible origin: n box pairs plus extra random
// half spaces, every row one LinearBlock.
DomainDrivenProblem make_lp(int n, int extra, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  const int m = 2 * n + extra;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
  Eigen::VectorXd beta(m);
  for (int j = 0; j < n; ++j) {
    a(j, j) = 1.0;
    beta(j) = 10.0;
    a(n + j, j) = -1.0;
    beta(n + j) = 10.0;
  }
  for (int i = 2 * n; i < m; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = nd(rng);
    beta(i) = 1.0 + std::abs(nd(rng));
  }
  Eigen::VectorXd c(n);
  for (int j = 0; j < n; ++j) c(j) = nd(rng);
  std::vector<std::shared_ptr<const BarrierOracle>> blocks;
  blocks.reserve(m);
  for (int i = 0; i < m; ++i) {
    blocks.push_back(std::make_shared<LinearBlock>(beta(i)));
  }
  return {a, c, std::make_shared<DirectSumBarrier>(std::move(blocks))};
}

std::shared_ptr<const DirectSumBarrier> mixed_barrier() {
  std::vector<std::shared_ptr<const BarrierOracle>> blocks = {
      std::make_shared<LinearBlock>(1.0),
      std::make_shared<SocpBlock>(3),
      std::make_shared<ExpBlock>(),
      std::make_shared<PowerBlock>(3.0),
  };
  return std::make_shared<DirectSumBarrier>(std::move(blocks));
}

void BM_barrier_mixed_eval(benchmark::State& state) {
  const auto barrier = mixed_barrier();
  const Eigen::VectorXd u = barrier->cold_start();
  for (auto _ : state) {
    benchmark::DoNotOptimize(barrier->value(u));
    benchmark::DoNotOptimize(barrier->gradient(u));
    benchmark::DoNotOptimize(barrier->hessian(u));
  }
}
BENCHMARK(BM_barrier_mixed_eval);

void BM_conjugate_closed_form(benchmark::State& state) {
  const SocpBlock block(3);
  Eigen::VectorXd y(4);
  y << 0.1, -0.2, 0.3, -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(block.conjugate(y, std::nullopt));
  }
}
BENCHMARK(BM_conjugate_closed_form);

void BM_conjugate_newton_cold(benchmark::State& state) {
  const ExpBlock block;
  Eigen::VectorXd y(2);
  y << 1.0, -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(block.conjugate(y, std::nullopt));
  }
}
BENCHMARK(BM_conjugate_newton_cold);

void BM_conjugate_newton_warm(benchmark::State& state) {
  const ExpBlock block;
  Eigen::VectorXd y(2);
  y << 1.0, -2.0;
  const Eigen::VectorXd warm = block.conjugate(y, std::nullopt).u_star;
  for (auto _ : state) {
    benchmark::DoNotOptimize(block.conjugate(y, warm));
  }
}
BENCHMARK(BM_conjugate_newton_warm);

void BM_kkt_assemble_and_factor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DomainDrivenProblem p = make_lp(n, 2 * n, 7);  // m = 4n
  const KktContext ctx = assemble_kkt(p, 2.0);
  const Iterate it = Iterate::make(p, Eigen::VectorXd::Zero(n), 1.0, ctx.y0,
                                   2.0);
  for (auto _ : state) {
    const BarHessian hbar(it);
    const KktSystem sys(ctx, hbar, it.mu());
    benchmark::DoNotOptimize(sys.matrix().data());
  }
}
BENCHMARK(BM_kkt_assemble_and_factor)->Arg(10)->Arg(40);

void BM_solve_lp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DomainDrivenProblem p = make_lp(n, n, 11);  // m = 3n
  for (auto _ : state) {
    Solver solver(p);
    benchmark::DoNotOptimize(solver.solve().status);
  }
}
BENCHMARK(BM_solve_lp)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
