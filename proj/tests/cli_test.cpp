// End-to-end checks of the gla binary: exit codes, determinism, and the
// certificate round trip. The binary path arrives in the GLA_CLI environment
// variable; scratch files live under a per-run temp directory.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("GLA_CLI");
    REQUIRE_MESSAGE(env != nullptr, "GLA_CLI must point at the gla binary");
    return std::string(env);
  }();
  return path;
}

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "gla_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path write_example(const std::string& name) {
  const fs::path out = scratch_dir() / (name + ".json");
  REQUIRE(run("examples " + name + " --out " + out.string()).exit_code == 0);
  return out;
}

}  // namespace

TEST_CASE("validate: exit codes 0 / 2 / 3") {
  CHECK(run("validate " + write_example("sl2-z").string()).exit_code == 0);

  const RunResult grading = run("validate " + write_example("group-ring-s3").string());
  CHECK(grading.exit_code == 2);
  CHECK(grading.output.find("grading violation") != std::string::npos);

  const RunResult jacobi = run("validate " + write_example("sl2-jacobi-broken").string());
  CHECK(jacobi.exit_code == 2);
  CHECK(jacobi.output.find("jacobi violation at basis triple (0, 1, 2)") != std::string::npos);

  const fs::path trunc = scratch_dir() / "trunc.json";
  std::ofstream(trunc) << "{\"format_version\":";
  CHECK(run("validate " + trunc.string()).exit_code == 3);
  CHECK(run("validate " + (scratch_dir() / "missing.json").string()).exit_code == 3);
}

TEST_CASE("examples: unknown name is a usage error") {
  CHECK(run("examples no-such-example").exit_code == 4);
  CHECK(run("frobnicate").exit_code == 4);
}

TEST_CASE("check: abelian support note and witness certificates") {
  const RunResult sl2 = run("check " + write_example("sl2-z").string());
  CHECK(sl2.exit_code == 0);
  const json r1 = json::parse(sl2.output);
  CHECK(r1["support_subgroup"]["abelian"] == json(true));
  CHECK(r1["certificates"].empty());
  REQUIRE(!r1["notes"].empty());
  CHECK(r1["notes"][0].get<std::string>().find("abelian") != std::string::npos);

  const RunResult s3w = run("check " + write_example("s3-witness").string());
  CHECK(s3w.exit_code == 0);
  const json r2 = json::parse(s3w.output);
  REQUIRE(r2["certificates"].size() == 1);
  CHECK(r2["certificates"][0]["valid"] == json(true));
  CHECK(r2["support_subgroup"]["abelian"] == json(false));
  CHECK(r2["findings"].empty());
  CHECK(r2["final_identity"].size() == 1);
  CHECK(r2["final_identity"][0]["violations"].empty());
}

TEST_CASE("check: budget truncation is reported, exit stays 0") {
  const RunResult capped = run("check " + write_example("s3-witness").string() + " --budget 5");
  CHECK(capped.exit_code == 0);
  const json r = json::parse(capped.output);
  CHECK(r["star"]["budget_truncated"] == json(true));
  bool noted = false;
  for (const auto& n : r["notes"])
    noted = noted || n.get<std::string>().find("budget truncated") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("prime-scan: verdicts and exit code 0 either way") {
  const RunResult h3 = run("prime-scan " + write_example("heisenberg").string());
  CHECK(h3.exit_code == 0);
  const json rh = json::parse(h3.output);
  CHECK(rh["verdict"] == json("NotGradedPrime"));
  CHECK(rh["certificate"]["ideal_i"] == json::parse(R"([["0","0","1"]])"));

  const RunResult sl2 = run("prime-scan " + write_example("sl2-z").string());
  CHECK(sl2.exit_code == 0);
  const json rs = json::parse(sl2.output);
  CHECK(rs["verdict"] == json("NoWitnessFound"));
  CHECK(rs["candidates_examined"] == json(1));

  const fs::path empty = scratch_dir() / "dim0.json";
  std::ofstream(empty) << R"({"format_version":"1","group":{"kind":"free-abelian","rank":1},)"
                       << R"("dimension":0,"basis_labels":[],"brackets":[],)"
                       << R"("metadata":{"name":"empty","notes":""}})";
  const RunResult zero = run("prime-scan " + empty.string());
  CHECK(zero.exit_code == 0);
  CHECK(json::parse(zero.output)["candidates_examined"] == json(0));
}

TEST_CASE("verify-cert: round trip, tamper, wrong pairing") {
  const fs::path algebra = write_example("s3-witness");
  const fs::path report = scratch_dir() / "report.json";
  REQUIRE(run("check " + algebra.string() + " --out " + report.string()).exit_code == 0);

  CHECK(run("verify-cert " + algebra.string() + " " + report.string()).exit_code == 0);

  json tampered = json::parse(slurp(report));
  tampered["certificates"][0]["ideal_i"].erase(0);
  const fs::path tampered_path = scratch_dir() / "tampered.json";
  std::ofstream(tampered_path) << tampered.dump(2) << "\n";
  const RunResult bad = run("verify-cert " + algebra.string() + " " + tampered_path.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("INVALID") != std::string::npos);

  // a report pinned to a different algebra file is refused up front
  const fs::path other = write_example("sl2-z");
  CHECK(run("verify-cert " + other.string() + " " + report.string()).exit_code == 2);
}

TEST_CASE("determinism: identical bytes for repeated check and random runs") {
  const fs::path algebra = write_example("s3-witness");
  const RunResult a = run("check " + algebra.string() + " --max-len 3");
  const RunResult b = run("check " + algebra.string() + " --max-len 3");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const RunResult r1 = run("random --seed 7 --blocks 2 --backend permutation");
  const RunResult r2 = run("random --seed 7 --blocks 2 --backend permutation");
  CHECK(r1.exit_code == 0);
  REQUIRE(!r1.output.empty());
  CHECK(r1.output == r2.output);
  CHECK(r1.output != run("random --seed 8 --blocks 2 --backend permutation").output);

  // flags shift the report, so they are visibly part of the echo
  CHECK(a.output != run("check " + algebra.string() + " --max-len 2").output);
}

TEST_CASE("random documents validate and obey budget errors") {
  const fs::path doc = scratch_dir() / "random.json";
  REQUIRE(run("random --seed 11 --blocks 3 --backend free --out " + doc.string()).exit_code == 0);
  CHECK(run("validate " + doc.string()).exit_code == 0);
  CHECK(run("random --seed 1 --blocks 9").exit_code == 4);
  CHECK(run("random --seed 1 --backend galaxy").exit_code == 4);
}

TEST_CASE("emit paths agree: --out file and stdout carry the same bytes") {
  for (const char* name : {"sl2-z", "heisenberg", "s3-witness"}) {
    const fs::path doc = write_example(name);
    CHECK(run("examples " + std::string(name)).output == slurp(doc));

    const fs::path report = scratch_dir() / (std::string(name) + "_report.json");
    const RunResult to_stdout = run("check " + doc.string());
    REQUIRE(run("check " + doc.string() + " --out " + report.string()).exit_code ==
            to_stdout.exit_code);
    CHECK(to_stdout.output == slurp(report));
  }
}
