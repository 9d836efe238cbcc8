#include "umeb/commands.hpp"

#include <cmath>
#include <iostream>

#include "umeb/io.hpp"
#include "umeb/lift.hpp"
#include "umeb/schmidt.hpp"
#include "umeb/seeds.hpp"
#include "umeb/verifier.hpp"

namespace umeb {

namespace {

bool is_builtin(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return true;
  for (const std::string& name : builtin_seed_names()) {
    if (source == name) return true;
  }
  return false;
}

SeedBasis resolve_seed(const std::string& source, const Tolerance& tol) {
  if (source.empty()) throw ArgumentError("no seed specified");
  if (is_builtin(source)) return builtin_seed(source);
  return load_seed(source, tol);
}

FalsifierOptions falsifier_options(const CommandConfig& cfg) {
  FalsifierOptions opts;
  opts.restarts = cfg.restarts;
  opts.rng_seed = cfg.rng_seed;
  return opts;
}

}  // namespace

int cmd_generate(const CommandConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  const auto kind = lift_kind_from_string(cfg.theorem);
  if (!kind) {
    throw ArgumentError("generate: --theorem must be T1 or T2, got '" +
                        cfg.theorem + "'");
  }
  const SeedBasis seed = resolve_seed(cfg.seed_source, cfg.tolerance);

  CandidateUMEB set;
  if (*kind == LiftKind::T1) {
    if (cfg.p < 1 || cfg.q < 1) {
      throw ArgumentError("generate: T1 requires --p and --q (>= 1)");
    }
    if (cfg.d != 0 && cfg.d != seed.d_small) {
      throw ArgumentError("generate: --d conflicts with the seed dimension " +
                          std::to_string(seed.d_small));
    }
    set = lift_square_seed(seed, cfg.p, cfg.q);
  } else {
    if (cfg.d < 1) throw ArgumentError("generate: T2 requires --d (>= 1)");
    if ((cfg.p != 0 && cfg.p != seed.d_small) ||
        (cfg.q != 0 && cfg.q != seed.d_large)) {
      throw ArgumentError(
          "generate: --p/--q conflict with the seed shape " +
          std::to_string(seed.d_large) + "x" + std::to_string(seed.d_small));
    }
    set = lift_rect_seed(seed, cfg.d);
  }

  const std::string out_path =
      cfg.output_path.empty() ? "basis.json" : cfg.output_path;
  save_basis(set, out_path);

  out << "members=" << set.count() << " expected="
      << (set.expected_count ? *set.expected_count : set.count()) << "\n";
  if (set.degenerate) {
    err << "warning: degenerate lift (seed passthrough)\n";
  }
  out << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out,
               std::ostream& err) {
  if (cfg.input_path.empty()) throw ArgumentError("verify: no basis file");
  const CandidateUMEB set = load_basis(cfg.input_path);

  SeedBasis seed;
  bool have_seed = false;
  std::string seed_source = cfg.seed_source;
  if (seed_source.empty() && is_builtin(set.seed_provenance)) {
    seed_source = set.seed_provenance;
  }
  if (!seed_source.empty()) {
    seed = resolve_seed(seed_source, cfg.tolerance);
    have_seed = true;
  }

  const VerificationReport report = full_report(
      set, have_seed ? &seed : nullptr, cfg.tolerance, falsifier_options(cfg));

  const std::string out_path =
      cfg.output_path.empty() ? "report.json" : cfg.output_path;
  write_json_atomic(report_to_json(report, cfg.restarts), out_path);

  out << "orthogonality: " << (report.orthogonality_pass ? "pass" : "FAIL")
      << " (max residual " << report.orthogonality_max_residual << ")\n";
  out << "sv1: " << (report.sv1_pass ? "pass" : "FAIL") << " (max deviation "
      << report.sv1_max_deviation << ")\n";
  out << "members=" << report.member_count;
  if (report.expected_count) out << " expected=" << *report.expected_count;
  out << " complement_dim=" << report.complement_dim << "\n";
  out << "certificate: " << to_string(report.structural_certificate.status)
      << "\n";
  out << "unextendibility: " << to_string(report.verdict) << "\n";
  for (const std::string& note : report.notes) out << "note: " << note << "\n";
  out << "wrote " << out_path << "\n";

  if (!report.all_pass()) {
    err << "verification failed\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int cmd_analyze(const CommandConfig& cfg, std::ostream& out,
                std::ostream& err) {
  if (cfg.input_path.empty()) throw ArgumentError("analyze: no basis file");
  const CandidateUMEB set = load_basis(cfg.input_path);

  const OrthonormalityCheck ortho = verify_orthonormal(set, cfg.tolerance);
  if (!ortho.pass) {
    err << "analyze: basis is not orthonormal (max residual "
        << ortho.max_residual << ")\n";
    return kExitVerificationFailure;
  }

  const ComplementProfile profile = complement_rank_profile(
      set, cfg.samples, cfg.rng_seed, cfg.tolerance);

  const std::string out_path =
      cfg.output_path.empty() ? "profile.json" : cfg.output_path;
  write_json_atomic(profile_to_json(profile, cfg.tolerance), out_path);

  out << "complement_dim=" << profile.complement_dim
      << " max_rank_found=" << profile.max_rank_found << "\n";
  out << "rank_histogram:";
  for (const auto& [rank, count] : profile.rank_histogram) {
    out << " " << rank << ":" << count;
  }
  out << "\n";
  out << "wrote " << out_path << "\n";
  return kExitOk;
}

int cmd_catalog(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  for (const std::string& name : builtin_seed_names()) {
    const SeedBasis seed = builtin_seed(name);
    out << "builtin:" << name << "  kind=" << to_string(seed.kind)
        << "  shape=" << seed.d_large << "x" << seed.d_small
        << "  members=" << seed.size() << "  provenance=" << seed.provenance
        << "\n";
  }
  if (cfg.seed_source.empty()) return kExitOk;

  // File seed: list every invariant check instead of stopping at the first.
  out << "file:" << cfg.seed_source << "\n";
  SeedBasis seed;
  try {
    seed = parse_seed_unchecked(read_json(cfg.seed_source));
  } catch (const IoError& e) {
    out << "  parse: FAIL (" << e.what() << ")\n";
    return kExitVerificationFailure;
  }
  out << "  kind=" << to_string(seed.kind) << "  shape=" << seed.d_large
      << "x" << seed.d_small << "  members=" << seed.size() << "\n";
  bool all_pass = true;
  for (const SeedCheckResult& res : run_seed_checks(seed, cfg.tolerance)) {
    out << "  " << res.check << ": " << (res.pass ? "pass" : "FAIL") << " ("
        << res.message << ")\n";
    all_pass = all_pass && res.pass;
  }
  out << "  " << (all_pass ? "valid" : "invalid") << "\n";
  return all_pass ? kExitOk : kExitVerificationFailure;
}

int cmd_roundtrip(const CommandConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  if (cfg.input_path.empty()) throw ArgumentError("roundtrip: no basis file");
  const CandidateUMEB original = load_basis(cfg.input_path);
  const std::string out_path = cfg.output_path.empty()
                                   ? cfg.input_path + ".roundtrip.json"
                                   : cfg.output_path;
  save_basis(original, out_path);
  const CandidateUMEB copy = load_basis(out_path);

  double max_diff = 0.0;
  if (copy.count() != original.count()) {
    err << "roundtrip: member count changed\n";
    return kExitVerificationFailure;
  }
  for (long i = 0; i < original.count(); ++i) {
    max_diff = std::max(
        max_diff,
        (original.members[i] - copy.members[i]).cwiseAbs().maxCoeff());
  }
  out << "members=" << original.count() << " max_entry_diff=" << max_diff
      << "\n";
  out << "wrote " << out_path << "\n";
  if (max_diff > 1e-12) {
    err << "roundtrip: members differ beyond 1e-12\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int run_command(const CommandConfig& cfg, std::ostream& out,
                std::ostream& err) {
  try {
    if (!cfg.tolerance.valid()) {
      throw ArgumentError("tolerances must lie strictly in (0, 1)");
    }
    if (cfg.command == "generate") return cmd_generate(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "analyze") return cmd_analyze(cfg, out, err);
    if (cfg.command == "catalog") return cmd_catalog(cfg, out, err);
    if (cfg.command == "roundtrip") return cmd_roundtrip(cfg, out, err);
    throw ArgumentError("unknown command '" + cfg.command + "'");
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const ValidationError& e) {
    err << "error: invariant violation: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const DegeneracyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}

}  // namespace umeb
