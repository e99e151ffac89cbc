// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#include "ddipm/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ddipm/blocks.hpp"
#include "ddipm/errors.hpp"

namespace ddipm {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("problem file: " + where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
  return *it;
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

Eigen::VectorXd vector_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  Eigen::VectorXd v(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<int>(i)) = number_at(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Eigen::MatrixXd matrix_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  Eigen::MatrixXd m(j.size(), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string rw = where + "[" + std::to_string(i) + "]";
    Eigen::VectorXd row = vector_at(j[i], rw);
    if (row.size() != static_cast<int>(cols)) fail(rw, "ragged row length");
    m.row(static_cast<int>(i)) = row.transpose();
  }
  return m;
}

std::shared_ptr<const BarrierOracle> block_at(const json& j, int index) {
  const std::string where = "blocks[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(where, "expected an object");
  const std::string kind = field(j, "kind", where).get<std::string>();
  std::shared_ptr<const BarrierOracle> block;
  if (kind == "linear") {
    block = std::make_shared<LinearBlock>(
        number_at(field(j, "beta", where), where + ".beta"));
  } else if (kind == "socp") {
    const json& n = field(j, "n", where);
    if (!n.is_number_integer() || n.get<int>() < 1)
      fail(where + ".n", "expected a positive integer");
    block = std::make_shared<SocpBlock>(n.get<int>());
  } else if (kind == "sdp") {
    Eigen::MatrixXd b = matrix_at(field(j, "b", where), where + ".b");
    if (b.rows() != b.cols()) fail(where + ".b", "B must be square");
    block = std::make_shared<SdpBlock>(std::move(b));
  } else if (kind == "exp") {
    block = std::make_shared<ExpBlock>();
  } else if (kind == "entropy") {
    block = std::make_shared<EntropyBlock>();
  } else if (kind == "power") {
    block = std::make_shared<PowerBlock>(
        number_at(field(j, "p", where), where + ".p"));
  } else {
    fail(where + ".kind", "unknown block kind '" + kind + "'");
  }
  if (j.contains("rows")) {
    const json& rows = j["rows"];
    if (!rows.is_number_integer() || rows.get<int>() != block->dim())
      fail(where + ".rows", "row span does not match kind (expected " +
                                std::to_string(block->dim()) + ")");
  }
  return block;
}

DomainDrivenProblem from_json(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const std::string format =
      field(doc, "format", "document").get<std::string>();
  if (format != "ddipm-problem v1")
    fail("format", "unsupported format '" + format + "'");

  const json& jn = field(doc, "n", "document");
  if (!jn.is_number_integer() || jn.get<int>() < 1)
    fail("n", "expected a positive integer");
  const int n = jn.get<int>();

  Eigen::VectorXd c = vector_at(field(doc, "objective", "document"), "objective");
  if (c.size() != n) fail("objective", "length does not match n");

  const json& jblocks = field(doc, "blocks", "document");
  if (!jblocks.is_array() || jblocks.empty())
    fail("blocks", "expected a non-empty array");
  std::vector<std::shared_ptr<const BarrierOracle>> blocks;
  for (size_t i = 0; i < jblocks.size(); ++i)
    blocks.push_back(block_at(jblocks[i], static_cast<int>(i)));
  auto barrier = std::make_shared<DirectSumBarrier>(std::move(blocks));

  Eigen::MatrixXd a = matrix_at(field(doc, "a", "document"), "a");
  if (a.cols() != n) fail("a", "row width does not match n");
  if (a.rows() != barrier->dim())
    fail("a", "row count does not match the total block span (" +
                  std::to_string(barrier->dim()) + ")");

  std::optional<Eigen::VectorXd> z0;
  if (doc.contains("z0")) {
    z0 = vector_at(doc["z0"], "z0");
    if (z0->size() != a.rows()) fail("z0", "length does not match rows of a");
  }

  try {
    return DomainDrivenProblem(std::move(a), std::move(c), std::move(barrier),
                               std::move(z0));
  } catch (const ValidationError& e) {
    fail("document", e.what());
  }
}

json block_to_json(const BarrierOracle& block) {
  json j;
  j["kind"] = block.kind();
  j["rows"] = block.dim();
  if (const auto* lin = dynamic_cast<const LinearBlock*>(&block)) {
    j["beta"] = lin->beta();
  } else if (const auto* socp = dynamic_cast<const SocpBlock*>(&block)) {
    j["n"] = socp->cone_dim();
  } else if (const auto* sdp = dynamic_cast<const SdpBlock*>(&block)) {
    j["n"] = sdp->matrix_dim();
    json b = json::array();
    for (int i = 0; i < sdp->matrix_dim(); ++i) {
      json row = json::array();
      for (int k = 0; k < sdp->matrix_dim(); ++k) row.push_back(sdp->b()(i, k));
      b.push_back(std::move(row));
    }
    j["b"] = std::move(b);
  } else if (const auto* pow = dynamic_cast<const PowerBlock*>(&block)) {
    j["p"] = pow->p();
  }
  return j;
}

json to_json(const DomainDrivenProblem& p) {
  json doc;
  doc["format"] = "ddipm-problem v1";
  doc["n"] = p.num_vars();
  doc["objective"] = std::vector<double>(p.c().data(), p.c().data() + p.c().size());
  json blocks = json::array();
  for (int i = 0; i < p.barrier().block_count(); ++i)
    blocks.push_back(block_to_json(p.barrier().block(i)));
  doc["blocks"] = std::move(blocks);
  json a = json::array();
  for (int i = 0; i < p.num_rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < p.num_vars(); ++k) row.push_back(p.a()(i, k));
    a.push_back(std::move(row));
  }
  doc["a"] = std::move(a);
  if (!p.z0_synthesized())
    doc["z0"] = std::vector<double>(p.z0().data(), p.z0().data() + p.z0().size());
  return doc;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the byte offset into a line number for the error message.
    size_t line = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("problem file: line " + std::to_string(line) + ": " +
                     e.what());
  }
}

}  // namespace

DomainDrivenProblem parse_problem(const std::string& text) {
  return from_json(parse_document(text));
}

DomainDrivenProblem load_problem(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

DomainDrivenProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("problem file: cannot open '" + path + "'");
  return load_problem(in);
}

void save_problem(const DomainDrivenProblem& problem, std::ostream& out) {
  out << to_json(problem).dump(2) << '\n';
}

void save_problem_file(const DomainDrivenProblem& problem,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("problem file: cannot open '" + path + "' for writing");
  save_problem(problem, out);
}

}  // namespace ddipm
