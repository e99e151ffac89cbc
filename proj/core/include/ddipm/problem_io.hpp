// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_PROBLEM_IO_HPP_
#define DDIPM_PROBLEM_IO_HPP_

#include <iosfwd>
#include <string>

#include "ddipm/problem.hpp"

namespace ddipm {

// Problem files are JSON documents with format tag "ddipm-problem v1":
//   n         number of variables
//   objective array of n coefficients
//   blocks    array of { kind, rows, ...parameters } in row order
//   a         array of m rows, each an array of n coefficients
//   z0        optional interior start of length m
// Numbers round-trip exactly through save/load.  Parse failures throw
// ParseError with line or field context.
DomainDrivenProblem load_problem(std::istream& in);
DomainDrivenProblem load_problem_file(const std::string& path);
DomainDrivenProblem parse_problem(const std::string& text);

void save_problem(const DomainDrivenProblem& problem, std::ostream& out);
void save_problem_file(const DomainDrivenProblem& problem,
                       const std::string& path);

}  // namespace ddipm

#endif  // DDIPM_PROBLEM_IO_HPP_
