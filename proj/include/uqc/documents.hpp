/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef UQC_DOCUMENTS_HPP
#define UQC_DOCUMENTS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqc/catalog.hpp"
#include "uqc/channel.hpp"
#include "uqc/matrix.hpp"
#include "uqc/weyl_family.hpp"

namespace uqc {

// JSON interchange documents, schema_version 1.  A document is either a
// coefficient matrix
//
//   {"schema_version": 1, "kind": "coefficients", "d": 3,
//    "family": "rank_d",            // optional: rank_d | rank4_qutrit
//    "data": [[[re, im], ...] ...]} // d rows of d [re, im] pairs
//
// or a Kraus set
//
//   {"schema_version": 1, "kind": "kraus", "d": 3,
//    "data": [matrix, matrix, ...]} // each a d×d grid of [re, im] pairs
//
// Serialization is deterministic: fixed key order, two-space indentation,
// shortest round-trip decimals, trailing newline.

enum class DocumentKind { coefficients, kraus };
enum class DocumentFamily { none, rank_d, rank4_qutrit };

// Structural failure while reading a document: malformed JSON (with the
// 1-based text position when known) or a schema violation (line/column 0).
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& message, std::size_t line,
                std::size_t column);
  std::size_t line;
  std::size_t column;
};

struct InputDocument {
  int schema_version = 1;
  DocumentKind kind = DocumentKind::coefficients;
  std::size_t d = 0;
  DocumentFamily family = DocumentFamily::none;
  // One d×d matrix for coefficient documents; the Kraus list otherwise.
  std::vector<ComplexMatrix> matrices;

  // View as a coefficient matrix; requires kind == coefficients.
  CoefficientMatrix coefficients() const;

  // Realize the channel: Kraus documents directly, coefficient documents
  // through their family's builder (rank_d when no family is tagged).
  KrausChannel channel() const;
};

// ── Parsing and serialization ───────────────────────────────────────────────

InputDocument parse_document(const std::string& text);
InputDocument load_document(const std::string& path);

std::string serialize_document(const InputDocument& doc);
void save_document(const InputDocument& doc, const std::string& path);

// ── Construction ────────────────────────────────────────────────────────────

InputDocument document_from_coefficients(
    const CoefficientMatrix& c, DocumentFamily family = DocumentFamily::rank_d);
InputDocument document_from_channel(const KrausChannel& ch);

// Catalog entries map to documents by kind: coefficient entries keep their
// family tag, Kraus-set entries dump their operators, and unitary entries
// become single-operator Kraus documents.
InputDocument document_from_catalog(const NamedExample& entry);

// ── Names used in the JSON fields ───────────────────────────────────────────

std::string to_string(DocumentKind kind);
std::string to_string(DocumentFamily family);

}  // namespace uqc

#endif  // UQC_DOCUMENTS_HPP
