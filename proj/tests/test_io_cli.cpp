#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "umeb/commands.hpp"
#include "umeb/generators.hpp"
#include "umeb/io.hpp"
#include "umeb/lift.hpp"
#include "umeb/verifier.hpp"

using namespace umeb;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const CommandConfig& cfg, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_command(cfg, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("basis save / load round trip is exact") {
  const CandidateUMEB set = lift_square_seed(bravyi_smolin_seed(), 2, 3);
  const fs::path path = temp_file("umeb_basis_rt.json");
  save_basis(set, path);
  const CandidateUMEB loaded = load_basis(path);
  CHECK(loaded.dA == set.dA);
  CHECK(loaded.dB == set.dB);
  CHECK(loaded.lift == LiftKind::T1);
  CHECK(loaded.params.p == 2);
  CHECK(loaded.params.q == 3);
  CHECK(loaded.params.d == 3);
  CHECK(loaded.seed_provenance == "builtin:bravyi-smolin");
  CHECK(loaded.expected_count == 48);
  REQUIRE(loaded.count() == set.count());
  REQUIRE(loaded.tags.size() == set.tags.size());
  for (long i = 0; i < set.count(); ++i) {
    CHECK((loaded.members[i] - set.members[i]).cwiseAbs().maxCoeff() == 0.0);
    CHECK(loaded.tags[i] == set.tags[i]);
  }
  fs::remove(path);
}

TEST_CASE("verifying a loaded basis matches verifying in memory") {
  const SeedBasis seed = two_by_three_seed();
  const CandidateUMEB set = lift_rect_seed(seed, 3);
  const fs::path path = temp_file("umeb_basis_vs_mem.json");
  save_basis(set, path);
  const CandidateUMEB loaded = load_basis(path);

  FalsifierOptions opts;
  opts.restarts = 20;
  const Json a = report_to_json(full_report(set, &seed, {}, opts), 20);
  const Json b = report_to_json(full_report(loaded, &seed, {}, opts), 20);
  CHECK(a.dump() == b.dump());
  fs::remove(path);
}

TEST_CASE("generate -> verify -> analyze pipeline via the command layer") {
  const fs::path basis = temp_file("umeb_pipe_basis.json");
  const fs::path report = temp_file("umeb_pipe_report.json");
  const fs::path profile = temp_file("umeb_pipe_profile.json");

  CommandConfig gen;
  gen.command = "generate";
  gen.theorem = "T1";
  gen.seed_source = "builtin:bravyi-smolin";
  gen.p = 2;
  gen.q = 3;
  gen.output_path = basis.string();
  std::string text;
  REQUIRE(run(gen, &text) == kExitOk);
  CHECK(text.find("members=48 expected=48") != std::string::npos);

  CommandConfig ver;
  ver.command = "verify";
  ver.input_path = basis.string();
  ver.output_path = report.string();
  ver.restarts = 20;
  REQUIRE(run(ver, &text) == kExitOk);

  const Json rep = read_json(report);
  CHECK(rep.at("all_pass").get<bool>());
  CHECK(rep.at("certificate_status").get<std::string>() == "PROVEN");
  CHECK(rep.at("member_count").get<long>() == 48);
  CHECK(rep.at("complement_dim").get<long>() == 6);

  CommandConfig ana;
  ana.command = "analyze";
  ana.input_path = basis.string();
  ana.output_path = profile.string();
  ana.samples = 300;
  REQUIRE(run(ana, &text) == kExitOk);
  const Json prof = read_json(profile);
  CHECK(prof.at("max_rank_found").get<int>() == 4);
  CHECK(prof.at("witness_max_rank").is_array());

  fs::remove(basis);
  fs::remove(report);
  fs::remove(profile);
}

TEST_CASE("verify exits 1 on a zeroed member and still writes the report") {
  const fs::path basis = temp_file("umeb_zeroed_basis.json");
  const fs::path report = temp_file("umeb_zeroed_report.json");
  CandidateUMEB set = lift_rect_seed(two_by_three_seed(), 3);
  set.members[7].setZero();
  save_basis(set, basis);

  CommandConfig ver;
  ver.command = "verify";
  ver.input_path = basis.string();
  ver.output_path = report.string();
  ver.restarts = 5;
  CHECK(run(ver) == kExitVerificationFailure);
  const Json rep = read_json(report);
  CHECK_FALSE(rep.at("all_pass").get<bool>());
  CHECK_FALSE(rep.at("sv1_pass").get<bool>());
  fs::remove(basis);
  fs::remove(report);
}

TEST_CASE("verify accepts a complete basis with an explanatory note") {
  CandidateUMEB set;
  set.dA = 3;
  set.dB = 3;
  set.source = "full clock-shift basis of M_3x3";
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) set.members.push_back(clock_shift(3, n, m));

  const fs::path basis = temp_file("umeb_complete_basis.json");
  const fs::path report = temp_file("umeb_complete_report.json");
  save_basis(set, basis);

  CommandConfig ver;
  ver.command = "verify";
  ver.input_path = basis.string();
  ver.output_path = report.string();
  ver.restarts = 5;
  std::string text;
  CHECK(run(ver, &text) == kExitOk);
  CHECK(text.find("complete basis") != std::string::npos);
  const Json rep = read_json(report);
  CHECK(rep.at("complement_dim").get<long>() == 0);
  CHECK(rep.at("unextendibility_verdict").get<std::string>() ==
        "NOT_APPLICABLE");
  CHECK_FALSE(rep.at("falsifier_applicable").get<bool>());
  fs::remove(basis);
  fs::remove(report);
}

TEST_CASE("kind gate: T1 refuses the rectangular seed with exit 2") {
  CommandConfig gen;
  gen.command = "generate";
  gen.theorem = "T1";
  gen.seed_source = "builtin:two-by-three";
  gen.p = 2;
  gen.q = 3;
  gen.output_path = temp_file("umeb_never_written.json").string();
  std::string text;
  CHECK(run(gen, &text) == kExitUsageError);
  CHECK(text.find("incompatible") != std::string::npos);
}

TEST_CASE("catalog lists builtins and validates files per invariant") {
  CommandConfig cat;
  cat.command = "catalog";
  std::string text;
  REQUIRE(run(cat, &text) == kExitOk);
  CHECK(text.find("builtin:bravyi-smolin") != std::string::npos);
  CHECK(text.find("builtin:two-by-three") != std::string::npos);

  const fs::path good = temp_file("umeb_catalog_good.json");
  save_seed(two_by_three_seed(), good);
  cat.seed_source = good.string();
  REQUIRE(run(cat, &text) == kExitOk);
  CHECK(text.find("valid") != std::string::npos);
  fs::remove(good);

  const fs::path bad = temp_file("umeb_catalog_bad.json");
  SeedBasis seed = two_by_three_seed();
  seed.members[0] *= 0.3;
  save_seed(seed, bad);
  cat.seed_source = bad.string();
  CHECK(run(cat, &text) == kExitVerificationFailure);
  CHECK(text.find("sv1: FAIL") != std::string::npos);
  CHECK(text.find("shape: pass") != std::string::npos);
  fs::remove(bad);
}

TEST_CASE("roundtrip command preserves members") {
  const fs::path basis = temp_file("umeb_rt_in.json");
  const fs::path copy = temp_file("umeb_rt_out.json");
  save_basis(lift_rect_seed(two_by_three_seed(), 2), basis);

  CommandConfig rt;
  rt.command = "roundtrip";
  rt.input_path = basis.string();
  rt.output_path = copy.string();
  std::string text;
  CHECK(run(rt, &text) == kExitOk);
  CHECK(text.find("max_entry_diff=0") != std::string::npos);
  fs::remove(basis);
  fs::remove(copy);
}

TEST_CASE("report files are byte-identical across identical runs") {
  const fs::path basis = temp_file("umeb_det_basis.json");
  save_basis(lift_square_seed(bravyi_smolin_seed(), 2, 3), basis);

  auto run_once = [&](const fs::path& report) {
    CommandConfig ver;
    ver.command = "verify";
    ver.input_path = basis.string();
    ver.output_path = report.string();
    ver.restarts = 10;
    ver.rng_seed = 777;
    REQUIRE(run(ver) == kExitOk);
  };
  const fs::path r1 = temp_file("umeb_det_r1.json");
  const fs::path r2 = temp_file("umeb_det_r2.json");
  run_once(r1);
  run_once(r2);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(!slurp(r1).empty());
  fs::remove(basis);
  fs::remove(r1);
  fs::remove(r2);
}

TEST_CASE("CLI binary honors the exit-code contract" *
          doctest::skip(std::getenv("UMEB_CLI_BIN") == nullptr)) {
  const std::string bin = std::getenv("UMEB_CLI_BIN");
  const fs::path basis = temp_file("umeb_cli_basis.json");
  const fs::path report = temp_file("umeb_cli_report.json");

  auto shell = [](const std::string& cmd) {
    const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };

  CHECK(shell(bin + " generate --theorem T2 --seed builtin:two-by-three"
                    " --d 3 -o " + basis.string()) == 0);
  CHECK(shell(bin + " verify " + basis.string() + " --restarts 20 -o " +
              report.string()) == 0);
  CHECK(shell(bin + " generate --theorem T1 --seed builtin:two-by-three"
                    " --p 2 --q 3 -o /tmp/umeb_nope.json") == 2);
  CHECK(shell(bin + " verify /nonexistent.json -o /tmp/umeb_nope2.json") == 2);
  CHECK(shell(bin + " catalog") == 0);
  CHECK(shell(bin + " roundtrip " + basis.string() + " -o " +
              (basis.string() + ".copy")) == 0);

  // environment supplies tolerance defaults; explicit flags win
  CHECK(shell("UMEB_TOLERANCE_SV=0.5 " + bin + " verify " + basis.string() +
              " --restarts 5 -o " + report.string()) == 0);
  Json rep = read_json(report);
  CHECK(rep.at("tolerances").at("eps_sv").get<double>() == 0.5);
  CHECK(shell("UMEB_TOLERANCE_SV=0.5 " + bin + " verify " + basis.string() +
              " --restarts 5 --eps-sv 1e-7 -o " + report.string()) == 0);
  rep = read_json(report);
  CHECK(rep.at("tolerances").at("eps_sv").get<double>() == 1e-7);

  fs::remove(basis);
  fs::remove(report);
  fs::remove(basis.string() + ".copy");
}
