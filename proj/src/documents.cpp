/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "uqc/documents.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

namespace uqc {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw DocumentError(message, 0, 0);
}

// Translate a byte offset from the JSON parser into a 1-based line/column
// pair within the original text.
std::pair<std::size_t, std::size_t> locate(const std::string& text,
                                           std::size_t byte) {
  std::size_t pos = byte > 0 ? byte - 1 : 0;
  if (pos > text.size()) pos = text.size();
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < pos; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

cxd parse_entry(const ordered_json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
      !value[1].is_number())
    fail(where + ": each entry must be a [re, im] pair of numbers");
  const double re = value[0].get<double>();
  const double im = value[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    fail(where + ": entries must be finite");
  return cxd{re, im};
}

ComplexMatrix parse_matrix(const ordered_json& value, std::size_t d,
                           const std::string& where) {
  if (!value.is_array() || value.size() != d)
    fail(where + ": expected " + std::to_string(d) + " rows");
  ComplexMatrix m = ComplexMatrix::zeros(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const ordered_json& row = value[r];
    if (!row.is_array() || row.size() != d)
      fail(where + ": each row must hold " + std::to_string(d) + " entries");
    for (std::size_t c = 0; c < d; ++c)
      m(r, c) = parse_entry(row[c], where);
  }
  return m;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(ordered_json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DocumentError::DocumentError(const std::string& message, std::size_t line_in,
                             std::size_t column_in)
    : std::runtime_error(message), line(line_in), column(column_in) {}

// ── Document views ──────────────────────────────────────────────────────────

CoefficientMatrix InputDocument::coefficients() const {
  if (kind != DocumentKind::coefficients)
    fail("document does not hold coefficients");
  return CoefficientMatrix::create(matrices.front());
}

KrausChannel InputDocument::channel() const {
  if (kind == DocumentKind::kraus) return KrausChannel::create(matrices);
  const CoefficientMatrix c = coefficients();
  if (family == DocumentFamily::rank4_qutrit) return build_rank4_qutrit(c);
  return build_rank_d(c);
}

// ── Parsing ─────────────────────────────────────────────────────────────────

InputDocument parse_document(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte);
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << column;
    throw DocumentError(msg.str(), line, column);
  } catch (const nlohmann::json::exception& e) {
    // Non-positional failures, e.g. a literal that overflows a double.
    fail(std::string("unreadable JSON number: ") + e.what());
  }
  if (!root.is_object()) fail("document root must be an object");

  InputDocument doc;
  if (!root.contains("schema_version") ||
      !root["schema_version"].is_number_integer())
    fail("missing integer field 'schema_version'");
  doc.schema_version = root["schema_version"].get<int>();
  if (doc.schema_version != 1)
    fail("unsupported schema_version " + std::to_string(doc.schema_version));

  if (!root.contains("kind") || !root["kind"].is_string())
    fail("missing string field 'kind'");
  const std::string kind = root["kind"].get<std::string>();
  if (kind == "coefficients") {
    doc.kind = DocumentKind::coefficients;
  } else if (kind == "kraus") {
    doc.kind = DocumentKind::kraus;
  } else {
    fail("unknown kind '" + kind + "' (expected 'coefficients' or 'kraus')");
  }

  if (!root.contains("d") || !root["d"].is_number_integer())
    fail("missing integer field 'd'");
  const long long d_raw = root["d"].get<long long>();
  if (d_raw < 2) fail("field 'd' must be at least 2");
  doc.d = static_cast<std::size_t>(d_raw);

  if (root.contains("family")) {
    if (doc.kind != DocumentKind::coefficients)
      fail("field 'family' applies only to coefficient documents");
    if (!root["family"].is_string()) fail("field 'family' must be a string");
    const std::string family = root["family"].get<std::string>();
    if (family == "rank_d") {
      doc.family = DocumentFamily::rank_d;
    } else if (family == "rank4_qutrit") {
      doc.family = DocumentFamily::rank4_qutrit;
    } else {
      fail("unknown family '" + family +
           "' (expected 'rank_d' or 'rank4_qutrit')");
    }
  }

  if (!root.contains("data") || !root["data"].is_array())
    fail("missing array field 'data'");
  const ordered_json& data = root["data"];

  if (doc.kind == DocumentKind::coefficients) {
    doc.matrices.push_back(parse_matrix(data, doc.d, "data"));
  } else {
    if (data.empty()) fail("data: a Kraus document needs at least one matrix");
    for (std::size_t k = 0; k < data.size(); ++k)
      doc.matrices.push_back(
          parse_matrix(data[k], doc.d, "data[" + std::to_string(k) + "]"));
  }
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

// ── Serialization ───────────────────────────────────────────────────────────

std::string serialize_document(const InputDocument& doc) {
  ordered_json root;
  root["schema_version"] = doc.schema_version;
  root["kind"] = to_string(doc.kind);
  root["d"] = doc.d;
  if (doc.family != DocumentFamily::none)
    root["family"] = to_string(doc.family);
  if (doc.kind == DocumentKind::coefficients) {
    root["data"] = matrix_to_json(doc.matrices.front());
  } else {
    ordered_json list = ordered_json::array();
    for (const ComplexMatrix& m : doc.matrices)
      list.push_back(matrix_to_json(m));
    root["data"] = std::move(list);
  }
  return root.dump(2) + "\n";
}

void save_document(const InputDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write '" + path + "'");
  out << serialize_document(doc);
}

// ── Construction ────────────────────────────────────────────────────────────

InputDocument document_from_coefficients(const CoefficientMatrix& c,
                                         DocumentFamily family) {
  InputDocument doc;
  doc.kind = DocumentKind::coefficients;
  doc.d = c.d;
  doc.family = family;
  doc.matrices.push_back(c.alpha);
  return doc;
}

InputDocument document_from_channel(const KrausChannel& ch) {
  if (ch.dim_in != ch.dim_out)
    fail("only square channels can be serialized");
  InputDocument doc;
  doc.kind = DocumentKind::kraus;
  doc.d = ch.dim_in;
  doc.matrices = ch.kraus;
  return doc;
}

InputDocument document_from_catalog(const NamedExample& entry) {
  switch (entry.kind) {
    case ExampleKind::coefficients:
      return document_from_coefficients(
          *entry.coefficients, entry.family == FamilyTag::rank4
                                   ? DocumentFamily::rank4_qutrit
                                   : DocumentFamily::rank_d);
    case ExampleKind::kraus_set:
      return document_from_channel(*entry.channel);
    case ExampleKind::unitary: {
      InputDocument doc;
      doc.kind = DocumentKind::kraus;
      doc.d = entry.unitary->rows();
      doc.matrices.push_back(*entry.unitary);
      return doc;
    }
  }
  fail("catalog entry has an unknown kind");
}

// ── Names used in the JSON fields ───────────────────────────────────────────

std::string to_string(DocumentKind kind) {
  return kind == DocumentKind::coefficients ? "coefficients" : "kraus";
}

std::string to_string(DocumentFamily family) {
  switch (family) {
    case DocumentFamily::none:
      return "none";
    case DocumentFamily::rank_d:
      return "rank_d";
    case DocumentFamily::rank4_qutrit:
      return "rank4_qutrit";
  }
  return "none";
}

}  // namespace uqc
