// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_REPORT_IO_HPP_
#define DDIPM_REPORT_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "ddipm/solver.hpp"

namespace ddipm {

// Report files use the "ddipm-report v1" JSON layout.  Doubles survive a
// save/load round trip bit for bit; non-finite values are spelled out as
// strings since JSON has no literal for them.
void save_report(std::ostream& out, const SolveReport& report);
void save_report_file(const std::string& path, const SolveReport& report);
SolveReport load_report(std::istream& in);
SolveReport load_report_file(const std::string& path);

// Iteration traces use a fixed CSV layout with 17 significant digits:
//   iter,phase,mu,omega,tau,alpha2,gap_lo,gap_hi
void save_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);
void save_trace_csv_file(const std::string& path,
                         const std::vector<TraceRecord>& trace);
std::vector<TraceRecord> load_trace_csv(std::istream& in);
std::vector<TraceRecord> load_trace_csv_file(const std::string& path);

}  // namespace ddipm

#endif  // DDIPM_REPORT_IO_HPP_
