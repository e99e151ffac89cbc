// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ddipm/errors.hpp"
#include "ddipm/problem_io.hpp"
#include "ddipm/report_io.hpp"
#include "ddipm/solver.hpp"

namespace {

// Exit codes: 0 optimal, 1 infeasible, 2 unbounded, 3 a limit was reached,
// 4 input error, 5 numerical failure.
int exit_code(ddipm::Status status) {
  switch (status) {
    case ddipm::Status::kOptimal: return 0;
    case ddipm::Status::kInfeasible: return 1;
    case ddipm::Status::kUnbounded: return 2;
    case ddipm::Status::kMuLimit:
    case ddipm::Status::kIterLimit: return 3;
    case ddipm::Status::kNumericalFailure: return 5;
  }
  return 5;
}

void print_vector(const char* label, const Eigen::VectorXd& v) {
  std::printf("%s[", label);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::printf("%s%.9g", i ? ", " : "", v(i));
  }
  std::printf("]\n");
}

void print_text(const ddipm::SolveReport& r) {
  std::printf("status:      %s\n", ddipm::to_string(r.status));
  std::printf("iterations:  %d\n", r.iterations);
  std::printf("objective:   %.12g\n", r.objective);
  std::printf("gap bounds:  [%.6g, %.6g]\n", r.gap.lower, r.gap.upper);
  std::printf("tau:         %.6g   (constraint shift scale 1/tau = %.3g)\n",
              r.tau, r.primal_feas);
  std::printf("mu:          %.6g   omega: %.3g\n", r.mu, r.omega);
  if (r.x.size() <= 16) print_vector("x:           ", r.x);
  if (r.certificate) {
    const ddipm::Certificate& c = *r.certificate;
    std::printf("certificate: |A'y|_inf = %.3g, support of the domain at y "
                "in [%.6g, %.6g]\n",
                c.aty_inf, c.support_lower, c.support_upper);
    if (c.y_bar.size() <= 16) print_vector("  y:         ", c.y_bar);
  }
  if (r.ray && r.ray->size() <= 16) print_vector("ray:         ", *r.ray);
  if (!r.message.empty()) std::printf("note:        %s\n", r.message.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddipm: interior-point solver for convex problems in "
               "domain-driven form"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve a problem file");
  std::string path;
  std::string trace_path;
  std::string format = "text";
  ddipm::Settings settings;
  solve->add_option("file", path, "problem file (ddipm-problem v1 JSON)")
      ->required();
  solve->add_option("--xi", settings.xi, "path widening parameter, above 1");
  solve->add_option("--delta1", settings.delta1,
                    "proximity below which the predictor runs");
  solve->add_option("--delta2", settings.delta2,
                    "proximity ceiling accepted after a predictor step");
  solve->add_option("--eps-gap", settings.eps_gap,
                    "relative duality gap tolerance");
  solve->add_option("--eps-feas", settings.eps_feas,
                    "feasibility tolerance on 1/tau");
  solve->add_option("--eps-cert", settings.eps_cert,
                    "infeasibility certificate tolerance");
  solve->add_option("--max-iter", settings.max_iter, "iteration budget");
  solve->add_option("--mu-max", settings.mu_max, "ceiling on mu");
  solve->add_flag("--strict", settings.strict,
                  "use the worst-case thresholds and corrector step");
  solve->add_option("--trace", trace_path,
                    "write the iteration trace to this CSV file");
  solve->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  try {
    const ddipm::DomainDrivenProblem problem =
        ddipm::load_problem_file(path);
    const ddipm::ValidationReport vr = problem.validate();
    if (!vr.ok) {
      for (const std::string& issue : vr.issues) {
        std::cerr << "error: " << issue << '\n';
      }
      return 4;
    }
    ddipm::Solver solver(problem, settings);
    const ddipm::SolveReport report = solver.solve();
    if (!trace_path.empty()) {
      ddipm::save_trace_csv_file(trace_path, report.trace);
    }
    if (format == "structured") {
      ddipm::save_report(std::cout, report);
    } else {
      print_text(report);
    }
    return exit_code(report.status);
  } catch (const ddipm::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ddipm::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ddipm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }
}
