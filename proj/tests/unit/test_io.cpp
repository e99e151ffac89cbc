// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <doctest.h>

#include "ddipm/blocks.hpp"
#include "ddipm/errors.hpp"
#include "ddipm/problem_io.hpp"
#include "ddipm/report_io.hpp"
#include "support.hpp"

using namespace ddipm;

namespace {

DomainDrivenProblem all_kinds_problem() {
  std::vector<std::shared_ptr<const BarrierOracle>> blocks;
  blocks.push_back(std::make_shared<LinearBlock>(0.25));
  blocks.push_back(std::make_shared<SocpBlock>(2));
  Eigen::MatrixXd b(2, 2);
  b << 2.0, 0.5, 0.5, 3.0;
  blocks.push_back(std::make_shared<SdpBlock>(b));
  blocks.push_back(std::make_shared<ExpBlock>());
  blocks.push_back(std::make_shared<EntropyBlock>());
  blocks.push_back(std::make_shared<PowerBlock>(2.5));
  auto barrier = std::make_shared<DirectSumBarrier>(std::move(blocks));

  const int m = barrier->dim();
  Eigen::MatrixXd a(m, 2);
  for (int i = 0; i < m; ++i) {
    a(i, 0) = std::sin(1.0 + i) / 3.0;
    a(i, 1) = (i == 3) ? std::numbers::pi : 1e-300 * (i + 1);
  }
  Eigen::VectorXd c(2);
  c << 1.0 / 3.0, -7.25e17;
  return DomainDrivenProblem(a, c, barrier, barrier->cold_start());
}

std::string saved(const DomainDrivenProblem& p) {
  std::ostringstream os;
  save_problem(p, os);
  return os.str();
}

}  // namespace

TEST_CASE("problem files round-trip every block kind bit for bit") {
  const DomainDrivenProblem p = all_kinds_problem();
  const DomainDrivenProblem q = parse_problem(saved(p));

  CHECK(q.num_vars() == p.num_vars());
  CHECK(q.num_rows() == p.num_rows());
  CHECK((q.a() - p.a()).norm() == 0.0);
  CHECK((q.c() - p.c()).norm() == 0.0);
  CHECK_FALSE(q.z0_synthesized());
  CHECK((q.z0() - p.z0()).norm() == 0.0);

  REQUIRE(q.barrier().block_count() == p.barrier().block_count());
  for (int i = 0; i < p.barrier().block_count(); ++i) {
    CHECK(q.barrier().block(i).kind() == p.barrier().block(i).kind());
    CHECK(q.barrier().block(i).dim() == p.barrier().block(i).dim());
  }
  CHECK(dynamic_cast<const LinearBlock&>(q.barrier().block(0)).beta() == 0.25);
  CHECK(dynamic_cast<const SocpBlock&>(q.barrier().block(1)).cone_dim() == 2);
  const auto& sdp = dynamic_cast<const SdpBlock&>(q.barrier().block(2));
  CHECK((sdp.b() - dynamic_cast<const SdpBlock&>(p.barrier().block(2)).b())
            .norm() == 0.0);
  CHECK(dynamic_cast<const PowerBlock&>(q.barrier().block(5)).p() == 2.5);

  // Saving the reloaded problem reproduces the same document.
  CHECK(saved(q) == saved(p));
}

TEST_CASE("synthesized interior starts are rebuilt rather than stored") {
  for (const auto& entry : testing::desk_catalog()) {
    CAPTURE(entry.name);
    const DomainDrivenProblem q = parse_problem(saved(entry.problem));
    CHECK(q.z0_synthesized() == entry.problem.z0_synthesized());
    CHECK((q.z0() - entry.problem.z0()).norm() == 0.0);
    CHECK((q.a() - entry.problem.a()).norm() == 0.0);
    CHECK((q.c() - entry.problem.c()).norm() == 0.0);
  }
}

TEST_CASE("problem parse failures carry field context") {
  const auto message_of = [](const std::string& text) {
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("(no error)");
  };

  CHECK(message_of("{ not json").find("line 1") != std::string::npos);
  CHECK(message_of(R"({"format":"nope"})").find("unsupported format") !=
        std::string::npos);
  CHECK(message_of(R"({"format":"ddipm-problem v1","n":1})")
            .find("missing field 'objective'") != std::string::npos);

  const std::string base =
      R"({"format":"ddipm-problem v1","n":1,"objective":[1.0],)";
  CHECK(message_of(base + R"("blocks":[{"kind":"frob"}],"a":[[1.0]]})")
            .find("unknown block kind") != std::string::npos);
  CHECK(message_of(base +
                   R"("blocks":[{"kind":"linear","beta":1.0}],"a":[[1.0],[2.0,3.0]]})")
            .find("ragged row length") != std::string::npos);
  CHECK(message_of(base +
                   R"("blocks":[{"kind":"socp","n":2}],"a":[[1.0]]})")
            .find("row count does not match") != std::string::npos);
  CHECK(message_of(base +
                   R"("blocks":[{"kind":"linear","beta":1.0,"rows":2}],"a":[[1.0]]})")
            .find("row span does not match kind") != std::string::npos);
  CHECK(message_of(base +
                   R"("blocks":[{"kind":"linear","beta":1.0}],"a":[[1.0]],"z0":[0.0,0.0]})")
            .find("z0") != std::string::npos);
  CHECK(message_of(
            R"({"format":"ddipm-problem v1","n":1,"objective":[1.0,2.0],"blocks":[{"kind":"linear","beta":1.0}],"a":[[1.0]]})")
            .find("length does not match n") != std::string::npos);
  CHECK_THROWS_AS(load_problem_file("/nonexistent/path.prob"), ParseError);
}

TEST_CASE("reports round-trip including non-finite values") {
  SolveReport r;
  r.status = Status::kUnbounded;
  r.iterations = 42;
  r.mu = 1e13;
  r.tau = 1.0 / 3.0;
  r.omega = std::numeric_limits<double>::quiet_NaN();
  r.objective = -std::numeric_limits<double>::infinity();
  r.primal_feas = 5e-9;
  r.x = Eigen::Vector3d(0.1, std::numeric_limits<double>::infinity(), -0.0);
  r.y_scaled = Eigen::Vector2d(1e-300, std::numbers::pi);
  r.gap.lower = -std::numeric_limits<double>::infinity();
  r.gap.upper = 2.5;
  r.gap.kappa = 0.125;
  Certificate cert;
  cert.y_bar = Eigen::Vector2d(0.5, 1.0);
  cert.aty_inf = 1e-12;
  cert.support_lower = -2.0;
  cert.support_upper = -1.5;
  cert.k_used = 4e8;
  r.certificate = cert;
  r.ray = Eigen::Vector3d(1.0, 0.0, -2.0);
  r.message = "ray heads off to minus infinity";
  r.trace.push_back({0, 'I', 1.0, 0.0, 1.0, 0.0, -3.0, 4.0});
  r.trace.push_back({1, 'P', 100.0, 1e-14, 55.5, 0.75, -2.9, 3.9});

  std::ostringstream os;
  save_report(os, r);
  std::istringstream is(os.str());
  const SolveReport q = load_report(is);

  CHECK(q.status == r.status);
  CHECK(q.iterations == r.iterations);
  CHECK(q.mu == r.mu);
  CHECK(q.tau == r.tau);
  CHECK(std::isnan(q.omega));
  CHECK(q.objective == r.objective);
  CHECK(q.primal_feas == r.primal_feas);
  CHECK(q.x(0) == r.x(0));
  CHECK(std::isinf(q.x(1)));
  CHECK(q.x(2) == 0.0);
  CHECK((q.y_scaled - r.y_scaled).norm() == 0.0);
  CHECK(q.gap.lower == r.gap.lower);
  CHECK(q.gap.upper == r.gap.upper);
  CHECK(q.gap.kappa == r.gap.kappa);
  REQUIRE(q.certificate.has_value());
  CHECK((q.certificate->y_bar - cert.y_bar).norm() == 0.0);
  CHECK(q.certificate->aty_inf == cert.aty_inf);
  CHECK(q.certificate->support_lower == cert.support_lower);
  CHECK(q.certificate->support_upper == cert.support_upper);
  CHECK(q.certificate->k_used == cert.k_used);
  REQUIRE(q.ray.has_value());
  CHECK((*q.ray - *r.ray).norm() == 0.0);
  CHECK(q.message == r.message);
  REQUIRE(q.trace.size() == 2);
  CHECK(q.trace[1].iter == 1);
  CHECK(q.trace[1].phase == 'P');
  CHECK(q.trace[1].mu == 100.0);
  CHECK(q.trace[1].omega == 1e-14);
  CHECK(q.trace[1].tau == 55.5);
  CHECK(q.trace[1].alpha2 == 0.75);
}

TEST_CASE("reports without optional sections round-trip too") {
  SolveReport r;
  r.status = Status::kOptimal;
  r.x = Eigen::VectorXd::Zero(1);
  r.y_scaled = Eigen::VectorXd::Zero(1);
  std::ostringstream os;
  save_report(os, r);
  std::istringstream is(os.str());
  const SolveReport q = load_report(is);
  CHECK(q.status == Status::kOptimal);
  CHECK_FALSE(q.certificate.has_value());
  CHECK_FALSE(q.ray.has_value());
  CHECK(q.trace.empty());
}

TEST_CASE("report loader rejects malformed documents") {
  const auto load_text = [](const std::string& text) {
    std::istringstream is(text);
    return load_report(is);
  };
  CHECK_THROWS_AS(load_text("not json at all"), ParseError);
  CHECK_THROWS_AS(load_text(R"({"format":"something else"})"), ParseError);
  try {
    load_text(R"({"format":"ddipm-report v1","status":"optimal"})");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing the field") != std::string::npos);
  }
  CHECK_THROWS_AS(
      load_text(R"({"format":"ddipm-report v1","status":"sideways"})"),
      ParseError);
}

TEST_CASE("trace CSV round-trips 17 significant digits") {
  std::vector<TraceRecord> trace;
  trace.push_back({0, 'I', 1.0, 0.0, 1.0, 0.0, -1.0 / 3.0, 1e-300});
  trace.push_back({7, 'P', 1.0000000000000002, 5.1e-14, 99.25, 0.8,
                   -std::numbers::pi, 7.25e17});
  trace.push_back({8, 'C', 2.0, std::numeric_limits<double>::infinity(), 1.0,
                   0.01, 0.0, 0.0});

  std::ostringstream os;
  save_trace_csv(os, trace);
  const std::string text = os.str();
  CHECK(text.rfind("iter,phase,mu,omega,tau,alpha2,gap_lo,gap_hi\n", 0) == 0);

  std::istringstream is(text);
  const std::vector<TraceRecord> back = load_trace_csv(is);
  REQUIRE(back.size() == trace.size());
  for (size_t i = 0; i < trace.size(); ++i) {
    CHECK(back[i].iter == trace[i].iter);
    CHECK(back[i].phase == trace[i].phase);
    CHECK(back[i].mu == trace[i].mu);
    CHECK(back[i].omega == trace[i].omega);
    CHECK(back[i].tau == trace[i].tau);
    CHECK(back[i].alpha2 == trace[i].alpha2);
    CHECK(back[i].gap_lo == trace[i].gap_lo);
    CHECK(back[i].gap_hi == trace[i].gap_hi);
  }
}

TEST_CASE("trace CSV loader enforces the header and field count") {
  std::istringstream bad_header("iter,mu\n1,2\n");
  CHECK_THROWS_AS(load_trace_csv(bad_header), ParseError);
  std::istringstream bad_line(
      "iter,phase,mu,omega,tau,alpha2,gap_lo,gap_hi\n1,P,2.0\n");
  CHECK_THROWS_AS(load_trace_csv(bad_line), ParseError);
}
