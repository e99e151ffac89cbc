// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ddipm/errors.hpp"

namespace ddipm {

namespace {

using nlohmann::json;

json num_to_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0.0 ? "inf" : "-inf";
}

double json_to_num(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ParseError(where + ": expected a number");
}

json vec_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(num_to_json(v(i)));
  return arr;
}

Eigen::VectorXd json_to_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        json_to_num(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

const json& need(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("report is missing the field '") + key +
                     "'");
  }
  return *it;
}

Status status_from_string(const std::string& s) {
  for (Status st : {Status::kOptimal, Status::kInfeasible, Status::kUnbounded,
                    Status::kMuLimit, Status::kIterLimit,
                    Status::kNumericalFailure}) {
    if (s == to_string(st)) return st;
  }
  throw ParseError("unknown status '" + s + "'");
}

}  // namespace

void save_report(std::ostream& out, const SolveReport& report) {
  json j;
  j["format"] = "ddipm-report v1";
  j["status"] = to_string(report.status);
  j["iterations"] = report.iterations;
  j["mu"] = num_to_json(report.mu);
  j["tau"] = num_to_json(report.tau);
  j["omega"] = num_to_json(report.omega);
  j["objective"] = num_to_json(report.objective);
  j["primal_feas"] = num_to_json(report.primal_feas);
  j["x"] = vec_to_json(report.x);
  j["y_scaled"] = vec_to_json(report.y_scaled);
  j["gap"] = {{"lower", num_to_json(report.gap.lower)},
              {"upper", num_to_json(report.gap.upper)},
              {"kappa", num_to_json(report.gap.kappa)}};
  if (report.certificate) {
    const Certificate& c = *report.certificate;
    j["certificate"] = {{"y_bar", vec_to_json(c.y_bar)},
                        {"aty_inf", num_to_json(c.aty_inf)},
                        {"support_lower", num_to_json(c.support_lower)},
                        {"support_upper", num_to_json(c.support_upper)},
                        {"k_used", num_to_json(c.k_used)}};
  }
  if (report.ray) j["ray"] = vec_to_json(*report.ray);
  j["message"] = report.message;
  json trace = json::array();
  for (const TraceRecord& r : report.trace) {
    trace.push_back({{"iter", r.iter},
                     {"phase", std::string(1, r.phase)},
                     {"mu", num_to_json(r.mu)},
                     {"omega", num_to_json(r.omega)},
                     {"tau", num_to_json(r.tau)},
                     {"alpha2", num_to_json(r.alpha2)},
                     {"gap_lo", num_to_json(r.gap_lo)},
                     {"gap_hi", num_to_json(r.gap_hi)}});
  }
  j["trace"] = std::move(trace);
  out << j.dump(2) << '\n';
}

void save_report_file(const std::string& path, const SolveReport& report) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  save_report(out, report);
}

SolveReport load_report(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || need(j, "format") != "ddipm-report v1") {
    throw ParseError("expected a \"ddipm-report v1\" document");
  }
  SolveReport r;
  r.status = status_from_string(need(j, "status").get<std::string>());
  r.iterations = need(j, "iterations").get<int>();
  r.mu = json_to_num(need(j, "mu"), "mu");
  r.tau = json_to_num(need(j, "tau"), "tau");
  r.omega = json_to_num(need(j, "omega"), "omega");
  r.objective = json_to_num(need(j, "objective"), "objective");
  r.primal_feas = json_to_num(need(j, "primal_feas"), "primal_feas");
  r.x = json_to_vec(need(j, "x"), "x");
  r.y_scaled = json_to_vec(need(j, "y_scaled"), "y_scaled");
  const json& gap = need(j, "gap");
  r.gap.lower = json_to_num(need(gap, "lower"), "gap.lower");
  r.gap.upper = json_to_num(need(gap, "upper"), "gap.upper");
  r.gap.kappa = json_to_num(need(gap, "kappa"), "gap.kappa");
  if (j.contains("certificate")) {
    const json& c = j["certificate"];
    Certificate cert;
    cert.y_bar = json_to_vec(need(c, "y_bar"), "certificate.y_bar");
    cert.aty_inf = json_to_num(need(c, "aty_inf"), "certificate.aty_inf");
    cert.support_lower =
        json_to_num(need(c, "support_lower"), "certificate.support_lower");
    cert.support_upper =
        json_to_num(need(c, "support_upper"), "certificate.support_upper");
    cert.k_used = json_to_num(need(c, "k_used"), "certificate.k_used");
    r.certificate = std::move(cert);
  }
  if (j.contains("ray")) r.ray = json_to_vec(j["ray"], "ray");
  r.message = need(j, "message").get<std::string>();
  for (const json& t : need(j, "trace")) {
    TraceRecord rec;
    rec.iter = need(t, "iter").get<int>();
    const std::string phase = need(t, "phase").get<std::string>();
    if (phase.size() != 1) throw ParseError("trace phase must be one letter");
    rec.phase = phase[0];
    rec.mu = json_to_num(need(t, "mu"), "trace.mu");
    rec.omega = json_to_num(need(t, "omega"), "trace.omega");
    rec.tau = json_to_num(need(t, "tau"), "trace.tau");
    rec.alpha2 = json_to_num(need(t, "alpha2"), "trace.alpha2");
    rec.gap_lo = json_to_num(need(t, "gap_lo"), "trace.gap_lo");
    rec.gap_hi = json_to_num(need(t, "gap_hi"), "trace.gap_hi");
    r.trace.push_back(rec);
  }
  return r;
}

SolveReport load_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_report(in);
}

namespace {

constexpr char kTraceHeader[] = "iter,phase,mu,omega,tau,alpha2,gap_lo,gap_hi";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void save_trace_csv(std::ostream& out,
                    const std::vector<TraceRecord>& trace) {
  out << kTraceHeader << '\n';
  for (const TraceRecord& r : trace) {
    out << r.iter << ',' << r.phase << ',' << fmt17(r.mu) << ','
        << fmt17(r.omega) << ',' << fmt17(r.tau) << ',' << fmt17(r.alpha2)
        << ',' << fmt17(r.gap_lo) << ',' << fmt17(r.gap_hi) << '\n';
  }
}

void save_trace_csv_file(const std::string& path,
                         const std::vector<TraceRecord>& trace) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  save_trace_csv(out, trace);
}

std::vector<TraceRecord> load_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw ParseError("trace file does not start with the expected header");
  }
  std::vector<TraceRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8 || fields[1].size() != 1) {
      throw ParseError("trace line " + std::to_string(line_no) +
                       " is malformed");
    }
    TraceRecord r;
    r.iter = std::atoi(fields[0].c_str());
    r.phase = fields[1][0];
    r.mu = std::strtod(fields[2].c_str(), nullptr);
    r.omega = std::strtod(fields[3].c_str(), nullptr);
    r.tau = std::strtod(fields[4].c_str(), nullptr);
    r.alpha2 = std::strtod(fields[5].c_str(), nullptr);
    r.gap_lo = std::strtod(fields[6].c_str(), nullptr);
    r.gap_hi = std::strtod(fields[7].c_str(), nullptr);
    out.push_back(r);
  }
  return out;
}

std::vector<TraceRecord> load_trace_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_trace_csv(in);
}

}  // namespace ddipm
