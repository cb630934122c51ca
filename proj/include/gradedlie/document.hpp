#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gradedlie/constructions.hpp"
#include "gradedlie/theorem.hpp"

namespace gradedlie {

using json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

// ---- primitive codecs ---------------------------------------------------
// Rationals travel as strings "num/den" (denominator omitted when 1);
// vectors and matrices as nested arrays of those strings. Group elements use
// the literal forms documented in groups.hpp. Every decoder throws
// parse_error carrying the location of the offending field.

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& where);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, std::size_t expected_len, const std::string& where);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t expected_cols, const std::string& where);

json context_to_json(const GroupContext& ctx);
GroupContext context_from_json(const json& j, const std::string& where);

json element_to_json(const GroupElement& g);
GroupElement element_from_json(const GroupContext& ctx, const json& j, const std::string& where);

/// Parses the compact key form produced by element_key.
GroupElement element_from_key(const GroupContext& ctx, const std::string& key);

// ---- algebra documents --------------------------------------------------

struct DocumentMeta {
  std::string name;
  std::string notes;
};

/// One algebra per document: format_version, group, dimension, basis_labels,
/// brackets (i < j records; omitted pairs are zero), metadata.
json algebra_to_document(const GradedAlgebra& a, const DocumentMeta& meta);

struct ParsedDocument {
  GradedAlgebra algebra;
  DocumentMeta meta;
};

/// Structural decoding only; run the validators afterwards to accept the
/// algebra. Throws parse_error with a located message on any defect.
ParsedDocument document_to_algebra(const json& doc);

// ---- certificates and verification --------------------------------------

json certificate_to_json(const Certificate& cert);

/// Re-verifies a serialized certificate against an algebra from scratch:
/// recomputes nonzeroness, orthogonality, gradedness and (when a pair is
/// present) noncommutation, and cross-checks the recorded flags.
struct CertificateCheck {
  bool valid = false;
  std::vector<std::string> failures;
};
CertificateCheck verify_certificate(const GradedAlgebra& a, const json& cert_doc);

// ---- helpers -------------------------------------------------------------

/// Canonical text form: 2-space indent, keys sorted, trailing newline.
/// Byte-identical across runs for equal documents.
std::string canonical_dump(const json& doc);

/// Lowercase hex SHA-256, used to pin certificates to their algebra file.
std::string sha256_hex(std::string_view bytes);

}  // namespace gradedlie
