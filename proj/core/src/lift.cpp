// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include <cmath>
#include <memory>
#include <vector>

#include "ddipm/blocks.hpp"
#include "ddipm/errors.hpp"
#include "ddipm/problem.hpp"

namespace ddipm {

namespace {

std::shared_ptr<const BarrierOracle> epigraph_block(const LiftedTerm& term) {
  switch (term.kind) {
    case TermKind::kExp:
      return std::make_shared<ExpBlock>();
    case TermKind::kEntropy:
      return std::make_shared<EntropyBlock>();
    case TermKind::kPower:
      return std::make_shared<PowerBlock>(term.power);
  }
  throw ValidationError("lift: unknown term kind");
}

// Exponential terms absorb beta multiplicatively; the other kinds cannot.
double coupling_weight(const LiftedTerm& term) {
  if (term.kind == TermKind::kExp) return term.alpha * std::exp(term.beta);
  if (term.beta != 0.0)
    throw ValidationError(
        "lift: nonzero beta is only representable for exponential terms");
  return term.alpha;
}

void check_term(const LiftedTerm& term, int base_vars) {
  if (term.alpha < 0.0)
    throw ValidationError("lift: term weight alpha must be nonnegative");
  if (term.a.size() != base_vars)
    throw ValidationError("lift: term vector length does not match base_vars");
  if (term.kind == TermKind::kPower && !(term.power >= 1.0))
    throw ValidationError("lift: power terms require p >= 1");
}

struct RowSink {
  std::vector<Eigen::VectorXd> rows;
  std::vector<std::shared_ptr<const BarrierOracle>> blocks;
  int width;

  explicit RowSink(int w) : width(w) {}

  // Appends a row whose base-variable part is `base` and which additionally
  // has coefficient `aux_coef` on auxiliary column `aux` (ignored if aux < 0).
  void add_row(const Eigen::VectorXd& base, int aux = -1, double aux_coef = 0.0) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(width);
    r.head(base.size()) = base;
    if (aux >= 0) r(aux) = aux_coef;
    rows.push_back(std::move(r));
  }
};

}  // namespace

DomainDrivenProblem lift(int base_vars, const Eigen::VectorXd& c_base,
                         const std::vector<LiftedConstraint>& constraints,
                         const std::vector<LinearRow>& linear_rows,
                         const std::vector<ConeRows>& cone_rows) {
  if (base_vars < 1) throw ValidationError("lift: base_vars must be positive");
  if (c_base.size() != base_vars)
    throw ValidationError("lift: objective length does not match base_vars");

  // First pass: count auxiliaries.  A constraint folds into a bare epigraph
  // block (no auxiliary) when it has a single active term and gamma = 0.
  int aux_count = 0;
  for (const auto& con : constraints) {
    if (con.g.size() != base_vars)
      throw ValidationError("lift: constraint g length does not match base_vars");
    int active = 0;
    for (const auto& t : con.terms) {
      check_term(t, base_vars);
      if (t.alpha > 0.0) ++active;
    }
    if (active >= 2 || (active == 1 && con.gamma != 0.0)) aux_count += active;
  }

  const int width = base_vars + aux_count;
  RowSink sink(width);
  int next_aux = base_vars;

  for (const auto& con : constraints) {
    std::vector<const LiftedTerm*> active;
    for (const auto& t : con.terms)
      if (t.alpha > 0.0) active.push_back(&t);

    if (active.empty()) {
      // Pure linear constraint: g'x + gamma <= 0.
      sink.add_row(con.g);
      sink.blocks.push_back(std::make_shared<LinearBlock>(-con.gamma));
      continue;
    }

    if (active.size() == 1 && con.gamma == 0.0) {
      // alpha f(a'x + beta) <= -g'x folds into (a'x, -g'x * scale) in epi f.
      const LiftedTerm& t = *active[0];
      const double scale = 1.0 / coupling_weight(t);
      sink.add_row(t.a);
      sink.add_row(-scale * con.g);
      sink.blocks.push_back(epigraph_block(t));
      continue;
    }

    // General case: one epigraph auxiliary per term plus a coupling row.
    Eigen::VectorXd coupling = Eigen::VectorXd::Zero(width);
    coupling.head(base_vars) = con.g;
    for (const LiftedTerm* t : active) {
      const int aux = next_aux++;
      sink.add_row(t->a);
      sink.add_row(Eigen::VectorXd::Zero(base_vars), aux, 1.0);
      sink.blocks.push_back(epigraph_block(*t));
      coupling(aux) = coupling_weight(*t);
    }
    sink.rows.push_back(std::move(coupling));
    sink.blocks.push_back(std::make_shared<LinearBlock>(-con.gamma));
  }

  for (const auto& lr : linear_rows) {
    if (lr.g.size() != base_vars)
      throw ValidationError("lift: linear row length does not match base_vars");
    sink.add_row(lr.g);
    sink.blocks.push_back(std::make_shared<LinearBlock>(-lr.gamma));
  }

  for (const auto& cr : cone_rows) {
    if (cr.p.cols() != base_vars || cr.r.size() != base_vars)
      throw ValidationError("lift: cone row width does not match base_vars");
    if (cr.p.rows() < 1) throw ValidationError("lift: empty cone rows");
    for (int i = 0; i < cr.p.rows(); ++i) sink.add_row(cr.p.row(i));
    sink.add_row(cr.r);
    sink.blocks.push_back(std::make_shared<SocpBlock>(static_cast<int>(cr.p.rows())));
  }

  if (sink.rows.empty()) throw ValidationError("lift: no constraints");

  Eigen::MatrixXd a(static_cast<int>(sink.rows.size()), width);
  for (size_t i = 0; i < sink.rows.size(); ++i)
    a.row(static_cast<int>(i)) = sink.rows[i].transpose();

  Eigen::VectorXd c = Eigen::VectorXd::Zero(width);
  c.head(base_vars) = c_base;

  return DomainDrivenProblem(std::move(a), std::move(c),
                             std::make_shared<DirectSumBarrier>(sink.blocks));
}

}  // namespace ddipm
