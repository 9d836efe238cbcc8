// Command-line front end: generate lifted candidate bases, verify the
// defining properties, analyze complement ranks, and manage seeds.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "umeb/commands.hpp"
#include "umeb/version.hpp"

namespace {

double env_or(const char* name, double fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return std::stod(value);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring non-numeric " << name << "='" << value
              << "'\n";
    return fallback;
  }
}

void add_tolerance_flags(CLI::App* cmd, umeb::Tolerance& tol) {
  cmd->add_option("--eps-orth", tol.eps_orth,
                  "inner-product residual bound (env UMEB_TOLERANCE_ORTH)");
  cmd->add_option("--eps-sv", tol.eps_sv,
                  "singular-value deviation bound (env UMEB_TOLERANCE_SV)");
  cmd->add_option("--eps-rank", tol.eps_rank,
                  "relative rank cutoff (env UMEB_TOLERANCE_RANK)");
}

}  // namespace

int main(int argc, char** argv) {
  umeb::CommandConfig cfg;

  // Environment supplies defaults; explicit flags take precedence.
  cfg.tolerance.eps_orth =
      env_or("UMEB_TOLERANCE_ORTH", cfg.tolerance.eps_orth);
  cfg.tolerance.eps_sv = env_or("UMEB_TOLERANCE_SV", cfg.tolerance.eps_sv);
  cfg.tolerance.eps_rank =
      env_or("UMEB_TOLERANCE_RANK", cfg.tolerance.eps_rank);

  CLI::App app{
      std::string("umeb ") + umeb::kVersion +
      " - construct and verify unextendible maximally entangled bases"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand(
      "generate", "Lift a seed basis into a candidate UMEB file");
  gen->add_option("--theorem", cfg.theorem, "construction: T1 or T2")
      ->required();
  gen->add_option("--seed", cfg.seed_source,
                  "builtin:<name> or a seed JSON file")
      ->required();
  gen->add_option("--p", cfg.p, "block count p (T1; p <= q)");
  gen->add_option("--q", cfg.q, "block count q (T1)");
  gen->add_option("--d", cfg.d, "lift factor d (T2)");
  gen->add_option("-o,--out", cfg.output_path,
                  "basis file to write (default basis.json)");
  add_tolerance_flags(gen, cfg.tolerance);

  CLI::App* ver = app.add_subcommand(
      "verify", "Verify a basis file and write a JSON report");
  ver->add_option("basis", cfg.input_path, "candidate basis JSON file")
      ->required();
  ver->add_option("-o,--out", cfg.output_path,
                  "report file to write (default report.json)");
  ver->add_option("--seed", cfg.seed_source,
                  "seed for the structural certificate (default: from the "
                  "basis header)");
  ver->add_option("--restarts", cfg.restarts, "falsifier restarts");
  ver->add_option("--rng-seed", cfg.rng_seed, "deterministic RNG seed");
  add_tolerance_flags(ver, cfg.tolerance);

  CLI::App* ana = app.add_subcommand(
      "analyze", "Profile complement ranks and the rho_perp state");
  ana->add_option("basis", cfg.input_path, "candidate basis JSON file")
      ->required();
  ana->add_option("-o,--out", cfg.output_path,
                  "profile file to write (default profile.json)");
  ana->add_option("--samples", cfg.samples,
                  "random complement combinations (0 = basis sweep only)");
  ana->add_option("--rng-seed", cfg.rng_seed, "deterministic RNG seed");
  add_tolerance_flags(ana, cfg.tolerance);

  CLI::App* cat =
      app.add_subcommand("catalog", "List builtin seeds; validate seed files");
  cat->add_option("--file", cfg.seed_source,
                  "seed JSON file to validate per invariant");
  add_tolerance_flags(cat, cfg.tolerance);

  CLI::App* rt = app.add_subcommand(
      "roundtrip", "Re-serialize a basis file and check the copy");
  rt->add_option("basis", cfg.input_path, "candidate basis JSON file")
      ->required();
  rt->add_option("-o,--out", cfg.output_path, "copy to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? umeb::kExitOk : umeb::kExitUsageError;
  }

  if (gen->parsed()) cfg.command = "generate";
  if (ver->parsed()) cfg.command = "verify";
  if (ana->parsed()) cfg.command = "analyze";
  if (cat->parsed()) cfg.command = "catalog";
  if (rt->parsed()) cfg.command = "roundtrip";

  return umeb::run_command(cfg, std::cout, std::cerr);
}
