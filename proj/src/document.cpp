#include "gradedlie/document.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>

namespace gradedlie {

json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where + ": expected rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const parse_error& e) {
    throw parse_error(where + ": " + e.what());
  }
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

Vector vector_from_json(const json& j, std::size_t expected_len, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected array");
  if (j.size() != expected_len)
    throw parse_error(where + ": expected " + std::to_string(expected_len) + " entries, got " +
                      std::to_string(j.size()));
  Vector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(vector_to_json(row));
  return out;
}

Matrix matrix_from_json(const json& j, std::size_t expected_cols, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected array of rows");
  Matrix m;
  for (std::size_t i = 0; i < j.size(); ++i)
    m.push_back(vector_from_json(j[i], expected_cols, where + "[" + std::to_string(i) + "]"));
  return m;
}

json context_to_json(const GroupContext& ctx) {
  json out;
  switch (ctx.kind) {
    case Backend::free_group:
      out["kind"] = "free";
      out["rank"] = ctx.rank;
      break;
    case Backend::free_abelian:
      out["kind"] = "free-abelian";
      out["rank"] = ctx.rank;
      break;
    case Backend::permutation:
      out["kind"] = "permutation";
      out["degree"] = ctx.degree;
      break;
    case Backend::direct_product: {
      out["kind"] = "product";
      json comps = json::array();
      for (const auto& c : ctx.components) comps.push_back(context_to_json(c));
      out["components"] = comps;
      break;
    }
  }
  return out;
}

GroupContext context_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw parse_error(where + ": expected group object with string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  const auto int_field = [&](const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer())
      throw parse_error(where + "." + name + ": expected integer");
    return j[name].get<int>();
  };
  try {
    if (kind == "free") return GroupContext::free_group(int_field("rank"));
    if (kind == "free-abelian") return GroupContext::free_abelian(int_field("rank"));
    if (kind == "permutation") return GroupContext::permutation(int_field("degree"));
  } catch (const mismatch_error& e) {
    throw parse_error(where + ": " + e.what());
  }
  if (kind == "product") {
    if (!j.contains("components") || !j["components"].is_array())
      throw parse_error(where + ".components: expected array");
    std::vector<GroupContext> comps;
    for (std::size_t i = 0; i < j["components"].size(); ++i)
      comps.push_back(context_from_json(j["components"][i],
                                        where + ".components[" + std::to_string(i) + "]"));
    return GroupContext::product(std::move(comps));
  }
  throw parse_error(where + ".kind: unknown backend \"" + kind + "\"");
}

json element_to_json(const GroupElement& g) {
  switch (g.kind) {
    case Backend::free_group:
      return element_key(g);
    case Backend::free_abelian: {
      json out = json::array();
      for (long long e : g.exps) out.push_back(e);
      return out;
    }
    case Backend::permutation: {
      json out = json::array();
      for (int v : g.image) out.push_back(v);
      return out;
    }
    case Backend::direct_product: {
      json out = json::array();
      for (const auto& p : g.parts) out.push_back(element_to_json(p));
      return out;
    }
  }
  return nullptr;
}

GroupElement element_from_json(const GroupContext& ctx, const json& j, const std::string& where) {
  GroupElement g;
  g.kind = ctx.kind;
  switch (ctx.kind) {
    case Backend::free_group: {
      if (!j.is_string()) throw parse_error(where + ": expected free-group word string");
      for (const char ch : j.get<std::string>()) {
        int letter = 0;
        if (ch >= 'a' && ch <= 'z') letter = ch - 'a' + 1;
        else if (ch >= 'A' && ch <= 'Z') letter = -(ch - 'A' + 1);
        else throw parse_error(where + ": invalid letter in word");
        // reduce as we read so any input word denotes its canonical form
        if (!g.word.empty() && g.word.back() == -letter) g.word.pop_back();
        else g.word.push_back(letter);
      }
      break;
    }
    case Backend::free_abelian: {
      if (!j.is_array()) throw parse_error(where + ": expected integer array");
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
          throw parse_error(where + "[" + std::to_string(i) + "]: expected integer");
        g.exps.push_back(j[i].get<long long>());
      }
      break;
    }
    case Backend::permutation: {
      if (!j.is_array()) throw parse_error(where + ": expected image array");
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
          throw parse_error(where + "[" + std::to_string(i) + "]: expected integer");
        g.image.push_back(j[i].get<int>());
      }
      break;
    }
    case Backend::direct_product: {
      if (!j.is_array()) throw parse_error(where + ": expected array of component literals");
      if (j.size() != ctx.components.size())
        throw parse_error(where + ": expected " + std::to_string(ctx.components.size()) +
                          " components, got " + std::to_string(j.size()));
      for (std::size_t i = 0; i < j.size(); ++i)
        g.parts.push_back(element_from_json(ctx.components[i], j[i],
                                            where + "[" + std::to_string(i) + "]"));
      break;
    }
  }
  if (!conforms(ctx, g))
    throw parse_error(where + ": element does not conform to the group context");
  return g;
}

GroupElement element_from_key(const GroupContext& ctx, const std::string& key) {
  if (ctx.kind == Backend::free_group) return element_from_json(ctx, json(key), "key");
  json j;
  try {
    j = json::parse(key);
  } catch (const json::parse_error&) {
    throw parse_error("invalid element key \"" + key + "\"");
  }
  return element_from_json(ctx, j, "key");
}

json algebra_to_document(const GradedAlgebra& a, const DocumentMeta& meta) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["group"] = context_to_json(a.ctx());
  doc["dimension"] = a.dim();
  json labels = json::array();
  for (const auto& g : a.grading().labels) labels.push_back(element_to_json(g));
  doc["basis_labels"] = labels;
  json brackets = json::array();
  for (const auto& [key, value] : a.algebra().structure_constants()) {
    json rec;
    rec["i"] = key.first;
    rec["j"] = key.second;
    rec["value"] = vector_to_json(value);
    brackets.push_back(rec);
  }
  doc["brackets"] = brackets;
  doc["metadata"] = {{"name", meta.name}, {"notes", meta.notes}};
  return doc;
}

ParsedDocument document_to_algebra(const json& doc) {
  if (!doc.is_object()) throw parse_error("document: expected JSON object");
  if (!doc.contains("format_version") || doc["format_version"] != json(kFormatVersion))
    throw parse_error("format_version: expected \"" + std::string(kFormatVersion) + "\"");
  if (!doc.contains("group")) throw parse_error("group: missing");
  const GroupContext ctx = context_from_json(doc["group"], "group");

  if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned())
    throw parse_error("dimension: expected nonnegative integer");
  const std::size_t dim = doc["dimension"].get<std::size_t>();

  if (!doc.contains("basis_labels") || !doc["basis_labels"].is_array())
    throw parse_error("basis_labels: expected array");
  if (doc["basis_labels"].size() != dim)
    throw parse_error("basis_labels: expected " + std::to_string(dim) + " labels, got " +
                      std::to_string(doc["basis_labels"].size()));
  std::vector<GroupElement> labels;
  for (std::size_t i = 0; i < dim; ++i)
    labels.push_back(element_from_json(ctx, doc["basis_labels"][i],
                                       "basis_labels[" + std::to_string(i) + "]"));

  if (!doc.contains("brackets") || !doc["brackets"].is_array())
    throw parse_error("brackets: expected array");
  LieAlgebra::ConstantTable table;
  for (std::size_t r = 0; r < doc["brackets"].size(); ++r) {
    const std::string where = "brackets[" + std::to_string(r) + "]";
    const json& rec = doc["brackets"][r];
    if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") || !rec.contains("value"))
      throw parse_error(where + ": expected record {i, j, value}");
    if (!rec["i"].is_number_unsigned() || !rec["j"].is_number_unsigned())
      throw parse_error(where + ": i and j must be nonnegative integers");
    const std::size_t i = rec["i"].get<std::size_t>();
    const std::size_t j = rec["j"].get<std::size_t>();
    if (!(i < j && j < dim)) throw parse_error(where + ": indices must satisfy i < j < dimension");
    if (table.count({i, j})) throw parse_error(where + ": duplicate pair");
    table[{i, j}] = vector_from_json(rec["value"], dim, where + ".value");
  }

  DocumentMeta meta;
  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    const json& m = doc["metadata"];
    if (m.contains("name") && m["name"].is_string()) meta.name = m["name"].get<std::string>();
    if (m.contains("notes") && m["notes"].is_string()) meta.notes = m["notes"].get<std::string>();
  }

  try {
    return ParsedDocument{
        GradedAlgebra(LieAlgebra(dim, std::move(table)), Grading{ctx, std::move(labels)}), meta};
  } catch (const mismatch_error& e) {
    throw parse_error(std::string("document: ") + e.what());
  }
}

json certificate_to_json(const Certificate& cert) {
  json out;
  if (cert.pair) {
    out["pair"] = json::array({element_to_json(cert.pair->first),
                               element_to_json(cert.pair->second)});
  } else {
    out["pair"] = nullptr;
  }
  out["ideal_i"] = matrix_to_json(cert.ideal_i.basis_rows());
  out["ideal_j"] = matrix_to_json(cert.ideal_j.basis_rows());
  out["ideals_nonzero"] = cert.ideals_nonzero;
  out["bracket_zero"] = cert.bracket_zero;
  out["ideals_graded"] = cert.ideals_graded;
  out["valid"] = cert.valid();
  return out;
}

CertificateCheck verify_certificate(const GradedAlgebra& a, const json& cert_doc) {
  CertificateCheck check;
  if (!cert_doc.is_object()) {
    check.failures.push_back("certificate: expected JSON object");
    return check;
  }

  std::optional<std::pair<GroupElement, GroupElement>> pair;
  Matrix rows_i, rows_j;
  try {
    if (cert_doc.contains("pair") && !cert_doc["pair"].is_null()) {
      const json& p = cert_doc["pair"];
      if (!p.is_array() || p.size() != 2) throw parse_error("pair: expected two literals");
      pair = {element_from_json(a.ctx(), p[0], "pair[0]"),
              element_from_json(a.ctx(), p[1], "pair[1]")};
    }
    rows_i = matrix_from_json(cert_doc.value("ideal_i", json::array()), a.dim(), "ideal_i");
    rows_j = matrix_from_json(cert_doc.value("ideal_j", json::array()), a.dim(), "ideal_j");
  } catch (const parse_error& e) {
    check.failures.push_back(e.what());
    return check;
  }

  const Subspace ideal_i = Subspace::span(a.dim(), rows_i);
  const Subspace ideal_j = Subspace::span(a.dim(), rows_j);
  const Certificate recomputed = make_certificate(a, pair, ideal_i, ideal_j);

  if (!recomputed.ideals_nonzero) check.failures.push_back("an ideal is zero");
  if (!recomputed.bracket_zero) check.failures.push_back("ideals are not orthogonal");
  if (!recomputed.ideals_graded)
    check.failures.push_back("a claimed ideal is not a graded ideal");
  if (pair && !recomputed.pair_noncommuting)
    check.failures.push_back("certificate pair commutes");

  const auto flag = [&](const char* name, bool expected) {
    if (cert_doc.contains(name) && cert_doc[name].is_boolean() &&
        cert_doc[name].get<bool>() != expected)
      check.failures.push_back(std::string("recorded flag ") + name +
                               " disagrees with recomputation");
  };
  flag("ideals_nonzero", recomputed.ideals_nonzero);
  flag("bracket_zero", recomputed.bracket_zero);
  flag("ideals_graded", recomputed.ideals_graded);

  check.valid = check.failures.empty() && recomputed.valid();
  return check;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

}  // namespace gradedlie
