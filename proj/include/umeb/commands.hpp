#ifndef UMEB_COMMANDS_HPP
#define UMEB_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "umeb/random.hpp"
#include "umeb/types.hpp"

namespace umeb {

/// Exit-code contract shared by every subcommand:
/// 0 all checks pass, 1 verification failure, 2 input/usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageError = 2;

struct CommandConfig {
  std::string command;      // generate | verify | analyze | catalog | roundtrip
  std::string theorem;      // "T1" | "T2" (generate)
  std::string seed_source;  // builtin:<name> | file path
  int p = 0;
  int q = 0;
  int d = 0;
  std::string input_path;   // basis file (verify / analyze / roundtrip)
  std::string output_path;
  std::uint64_t rng_seed = kDefaultRngSeed;
  int restarts = 200;
  long samples = 2000;
  Tolerance tolerance;
};

/// Builds a lift and writes the basis file; prints
/// "members=<n> expected=<n>".
int cmd_generate(const CommandConfig& cfg, std::ostream& out,
                 std::ostream& err);

/// Verifies a basis file, writes the JSON report (also on check failure),
/// and returns the exit code per the contract.
int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes the complement rank profile of a verified basis file.
int cmd_analyze(const CommandConfig& cfg, std::ostream& out,
                std::ostream& err);

/// Lists builtin seeds; with a file seed, validates it per-invariant.
int cmd_catalog(const CommandConfig& cfg, std::ostream& out,
                std::ostream& err);

/// Loads a basis file, re-serializes it, and checks the copy loads back
/// member-wise identical.
int cmd_roundtrip(const CommandConfig& cfg, std::ostream& out,
                  std::ostream& err);

/// Dispatches on cfg.command, mapping exceptions to the exit-code contract.
int run_command(const CommandConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace umeb

#endif  // UMEB_COMMANDS_HPP
