// gla: batch front-end for graded Lie algebra documents.
//
// Exit codes are a stable contract:
//   0 pass / verdict reached, 1 theorem-violation finding,
//   2 domain-level rejection, 3 parse error, 4 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gradedlie/constructions.hpp"
#include "gradedlie/document.hpp"
#include "gradedlie/theorem.hpp"

using namespace gradedlie;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;
constexpr int kExitUsage = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const json& doc, const std::string& out_path) {
  const std::string text = canonical_dump(doc);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << text;
}

struct LoadedAlgebra {
  GradedAlgebra algebra;
  DocumentMeta meta;
  std::string sha256;
};

LoadedAlgebra load_document(const std::string& path) {
  const std::string bytes = read_file(path);
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  ParsedDocument parsed = document_to_algebra(doc);
  return {std::move(parsed.algebra), std::move(parsed.meta), sha256_hex(bytes)};
}

/// Runs both validators and prints violations; returns true when clean.
bool report_validity(const GradedAlgebra& a, std::ostream& os) {
  const auto jacobi = validate_algebra(a.algebra());
  for (const auto& v : jacobi) {
    os << "jacobi violation at basis triple (" << v.i << ", " << v.j << ", " << v.k
       << "): residual " << Subspace::span(a.dim(), {v.residual}).key() << "\n";
  }
  const auto grading = validate_grading(a);
  for (const auto& v : grading) {
    os << "grading violation at basis pair (" << v.i << ", " << v.j << "): labels "
       << element_key(a.grading().labels[v.i]) << ", " << element_key(a.grading().labels[v.j])
       << "; stray coordinates";
    for (const auto k : v.offending) os << " " << k;
    os << "\n";
  }
  return jacobi.empty() && grading.empty();
}

int cmd_validate(const std::string& path) {
  const LoadedAlgebra loaded = load_document(path);
  if (!report_validity(loaded.algebra, std::cout)) return kExitDomain;
  std::cout << "valid: dimension " << loaded.algebra.dim() << ", support size "
            << loaded.algebra.support().size() << "\n";
  return kExitOk;
}

json star_result_to_json(const StarResult& r) {
  json out;
  json tuple = json::array();
  for (const auto& g : r.tuple) tuple.push_back(element_to_json(g));
  out["tuple"] = tuple;
  out["bracket_dim"] = r.bracket_dim;
  if (r.violating_pair)
    out["violating_pair"] = json::array({r.violating_pair->first, r.violating_pair->second});
  return out;
}

int cmd_check(const std::string& path, std::size_t max_len, std::size_t budget,
              const std::string& out_path) {
  const LoadedAlgebra loaded = load_document(path);
  const GradedAlgebra& a = loaded.algebra;
  if (!report_validity(a, std::cerr)) return kExitDomain;

  json report;
  report["format_version"] = kFormatVersion;
  report["command"] = "check";
  report["flags"] = {{"max_len", max_len}, {"budget", budget}};
  report["algebra_sha256"] = loaded.sha256;
  report["algebra_name"] = loaded.meta.name;

  json support = json::array();
  for (const auto& g : a.support()) support.push_back(element_to_json(g));
  report["support"] = support;

  std::vector<std::string> findings;
  std::vector<std::string> notes;

  // corollary route
  const SupportSubgroupReport subgroup = support_subgroup_report(a);
  report["support_subgroup"]["abelian"] = subgroup.abelian;
  if (subgroup.violation) {
    report["support_subgroup"]["violation"] =
        json::array({element_to_json(subgroup.violation->first),
                     element_to_json(subgroup.violation->second)});
  } else {
    report["support_subgroup"]["violation"] = nullptr;
    notes.push_back("no noncommuting pairs; support subgroup abelian");
  }

  // proposition certificates
  const auto certificates = check_proposition(a);
  json certs = json::array();
  for (const auto& cert : certificates) {
    certs.push_back(certificate_to_json(cert));
    if (!cert.valid())
      findings.push_back("proposition certificate failed for pair (" +
                         element_key(cert.pair->first) + ", " + element_key(cert.pair->second) +
                         ")");
  }
  report["certificates"] = certs;

  // star property sweep
  const StarSweepReport sweep = star_sweep(a, max_len, ScanBudget{budget});
  json star;
  star["tuples_examined"] = sweep.tuples_examined;
  star["budget_truncated"] = sweep.budget_truncated;
  if (sweep.budget_truncated) notes.push_back("budget truncated: star sweep is partial");
  json star_results = json::array();
  json star_violations = json::array();
  for (const auto& r : sweep.results) {
    star_results.push_back(star_result_to_json(r));
    if (r.violating_pair) {
      star_violations.push_back(star_result_to_json(r));
      findings.push_back("star violation on tuple with nonzero bracket");
    }
  }
  star["results"] = star_results;
  star["violations"] = star_violations;
  report["star"] = star;

  // closing identity for every noncommuting support pair
  json final_reports = json::array();
  const auto& supp = a.support();
  for (std::size_t i = 0; i < supp.size(); ++i)
    for (std::size_t j = i + 1; j < supp.size(); ++j) {
      if (commute(a.ctx(), supp[i], supp[j])) continue;
      const FinalIdentityReport fr = final_identity_check(a, supp[i], supp[j], max_len);
      json fj;
      fj["pair"] = json::array({element_to_json(supp[i]), element_to_json(supp[j])});
      fj["max_len"] = fr.max_len;
      fj["tuples_checked"] = fr.tuples_checked;
      json viols = json::array();
      for (const auto& t : fr.violations) {
        json tj = json::array();
        for (const auto& g : t) tj.push_back(element_to_json(g));
        viols.push_back(tj);
        findings.push_back("closing identity violated for pair (" + element_key(supp[i]) + ", " +
                           element_key(supp[j]) + ")");
      }
      fj["violations"] = viols;
      final_reports.push_back(fj);
    }
  report["final_identity"] = final_reports;

  report["findings"] = findings;
  report["notes"] = notes;
  report["counts"] = {{"support", a.support().size()},
                      {"certificates", certificates.size()},
                      {"star_results", sweep.results.size()},
                      {"noncommuting_pairs", final_reports.size()}};

  emit(report, out_path);
  return findings.empty() ? kExitOk : kExitFinding;
}

int cmd_prime_scan(const std::string& path, const std::string& out_path) {
  const LoadedAlgebra loaded = load_document(path);
  const GradedAlgebra& a = loaded.algebra;
  if (!report_validity(a, std::cerr)) return kExitDomain;

  const PrimeScanVerdict verdict = prime_scan(a);
  json report;
  report["format_version"] = kFormatVersion;
  report["command"] = "prime-scan";
  report["algebra_sha256"] = loaded.sha256;
  report["algebra_name"] = loaded.meta.name;
  report["candidates_examined"] = verdict.candidates_examined;
  if (verdict.witness_found) {
    report["verdict"] = "NotGradedPrime";
    report["certificate"] = certificate_to_json(*verdict.certificate);
  } else {
    // an incomplete search never claims graded-primeness
    report["verdict"] = "NoWitnessFound";
    report["certificate"] = nullptr;
  }
  emit(report, out_path);
  return kExitOk;
}

int cmd_examples(const std::string& name, const std::string& out_path) {
  GradedAlgebra a = [&] {
    try {
      return example_by_name(name);
    } catch (const std::invalid_argument&) {
      throw CLI::ValidationError("examples", "unknown example \"" + name + "\"");
    }
  }();
  emit(algebra_to_document(a, {name, ""}), out_path);
  return kExitOk;
}

int cmd_random(std::uint64_t seed, const RandomParams& params, const std::string& out_path) {
  const GradedAlgebra a = random_graded(seed, params);
  DocumentMeta meta;
  meta.name = "random-" + std::to_string(seed);
  meta.notes = "blocks=" + std::to_string(params.blocks) + " backend=" + params.backend +
               " max_dim=" + std::to_string(params.max_dim);
  emit(algebra_to_document(a, meta), out_path);
  return kExitOk;
}

int cmd_verify_cert(const std::string& algebra_path, const std::string& cert_path) {
  const std::string algebra_bytes = read_file(algebra_path);
  json algebra_doc;
  json cert_file;
  try {
    algebra_doc = json::parse(algebra_bytes);
    cert_file = json::parse(read_file(cert_path));
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  const ParsedDocument parsed = document_to_algebra(algebra_doc);
  if (!report_validity(parsed.algebra, std::cerr)) return kExitDomain;

  // accept a bare certificate, {"certificate": ...}, or a report carrying
  // a "certificates" array
  std::vector<json> certs;
  if (cert_file.is_object() && cert_file.contains("certificates") &&
      cert_file["certificates"].is_array()) {
    for (const auto& c : cert_file["certificates"]) certs.push_back(c);
  } else if (cert_file.is_object() && cert_file.contains("certificate") &&
             cert_file["certificate"].is_object()) {
    certs.push_back(cert_file["certificate"]);
  } else if (cert_file.is_object() && cert_file.contains("ideal_i")) {
    certs.push_back(cert_file);
  }
  if (certs.empty()) {
    std::cout << "no certificates found in " << cert_path << "\n";
    return kExitDomain;
  }

  if (cert_file.is_object() && cert_file.contains("algebra_sha256") &&
      cert_file["algebra_sha256"].is_string() &&
      cert_file["algebra_sha256"].get<std::string>() != sha256_hex(algebra_bytes)) {
    std::cout << "certificate document was issued for a different algebra file "
                 "(sha256 mismatch)\n";
    return kExitDomain;
  }

  bool all_valid = true;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const CertificateCheck check = verify_certificate(parsed.algebra, certs[i]);
    if (check.valid) {
      std::cout << "certificate " << i << ": VALID\n";
    } else {
      all_valid = false;
      std::cout << "certificate " << i << ": INVALID\n";
      for (const auto& f : check.failures) std::cout << "  - " << f << "\n";
    }
  }
  return all_valid ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for group-graded Lie algebras"};
  app.require_subcommand(1);

  std::string path, out_path, cert_path, name;
  std::size_t max_len = 4, budget = 100000;
  std::uint64_t seed = 0;
  RandomParams params;

  auto* validate = app.add_subcommand("validate", "check the algebra and grading axioms");
  validate->add_option("path", path, "algebra document")->required();

  auto* check = app.add_subcommand("check", "run the proposition, star and closing checks");
  check->add_option("path", path, "algebra document")->required();
  check->add_option("--max-len", max_len, "maximum tuple length (default 4)");
  check->add_option("--budget", budget, "tuple evaluation budget (default 100000)");
  check->add_option("--out", out_path, "write the report document here instead of stdout");

  auto* prime = app.add_subcommand("prime-scan", "search for orthogonal graded ideals");
  prime->add_option("path", path, "algebra document")->required();
  prime->add_option("--out", out_path, "write the report document here instead of stdout");

  auto* examples = app.add_subcommand("examples", "write a named example document");
  examples->add_option("name", name, "example name")->required();
  examples->add_option("--out", out_path, "write the document here instead of stdout");

  auto* random = app.add_subcommand("random", "write a seeded random graded algebra");
  random->add_option("--seed", seed, "generator seed (default 0)");
  random->add_option("--blocks", params.blocks, "number of zoo blocks (default 2)");
  random->add_option("--backend", params.backend,
                     "free | free-abelian | permutation | product (default permutation)");
  random->add_option("--max-dim", params.max_dim, "dimension budget (default 24)");
  random->add_option("--out", out_path, "write the document here instead of stdout");

  auto* verify = app.add_subcommand("verify-cert", "re-verify certificates against an algebra");
  verify->add_option("algebra", path, "algebra document")->required();
  verify->add_option("certificate", cert_path, "certificate or report document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the error message
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (check->parsed()) return cmd_check(path, max_len, budget, out_path);
    if (prime->parsed()) return cmd_prime_scan(path, out_path);
    if (examples->parsed()) return cmd_examples(name, out_path);
    if (random->parsed()) return cmd_random(seed, params, out_path);
    if (verify->parsed()) return cmd_verify_cert(path, cert_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
