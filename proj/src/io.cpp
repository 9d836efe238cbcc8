#include "umeb/io.hpp"

#include <fstream>

#include "umeb/version.hpp"

namespace umeb {

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return entries;
}

Matrix matrix_from_json(const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows * cols) {
    throw IoError("matrix: expected " + std::to_string(rows * cols) +
                  " row-major entries");
  }
  Matrix m(rows, cols);
  Index idx = 0;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number()) {
      throw IoError("matrix: entries must be [re, im] pairs");
    }
    m(idx / cols, idx % cols) = Complex(e[0].get<double>(), e[1].get<double>());
    ++idx;
  }
  if (!m.allFinite()) throw IoError("matrix: non-finite entries");
  return m;
}

Json seed_to_json(const SeedBasis& seed) {
  Json j;
  j["kind"] = to_string(seed.kind);
  j["rows"] = seed.d_large;
  j["cols"] = seed.d_small;
  Json members = Json::array();
  for (const Matrix& w : seed.members) members.push_back(matrix_to_json(w));
  j["members"] = std::move(members);
  j["provenance"] = seed.provenance;
  return j;
}

SeedBasis parse_seed_unchecked(const Json& j) {
  SeedBasis seed;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "UUB") {
      seed.kind = SeedKind::UUB;
    } else if (kind == "USV1B") {
      seed.kind = SeedKind::USV1B;
    } else {
      throw IoError("seed: kind must be UUB or USV1B, got '" + kind + "'");
    }
    seed.d_large = j.at("rows").get<int>();
    seed.d_small = j.at("cols").get<int>();
    if (seed.d_large <= 0 || seed.d_small <= 0) {
      throw IoError("seed: rows and cols must be positive");
    }
    seed.provenance = j.value("provenance", std::string("unspecified"));
    for (const Json& m : j.at("members")) {
      seed.members.push_back(matrix_from_json(m, seed.d_large, seed.d_small));
    }
  } catch (const Json::exception& e) {
    throw IoError(std::string("seed: malformed JSON: ") + e.what());
  }
  return seed;
}

SeedBasis seed_from_json(const Json& j, const Tolerance& tol) {
  SeedBasis seed = parse_seed_unchecked(j);
  validate_seed(seed, tol);
  return seed;
}

void save_seed(const SeedBasis& seed, const std::filesystem::path& path) {
  write_json_atomic(seed_to_json(seed), path);
}

SeedBasis load_seed(const std::filesystem::path& path, const Tolerance& tol) {
  return seed_from_json(read_json(path), tol);
}

Json basis_to_json(const CandidateUMEB& set) {
  Json header;
  header["dA"] = set.dA;
  header["dB"] = set.dB;
  header["theorem"] = set.lift ? Json(to_string(*set.lift)) : Json(nullptr);
  header["seed_provenance"] = set.seed_provenance;
  header["tags"] = set.tags;
  header["p"] = set.lift ? Json(set.params.p) : Json(nullptr);
  header["q"] = set.lift ? Json(set.params.q) : Json(nullptr);
  header["d"] = set.lift ? Json(set.params.d) : Json(nullptr);
  header["member_count"] = set.count();
  header["expected_count"] =
      set.expected_count ? Json(*set.expected_count) : Json(nullptr);
  header["degenerate_lift"] = set.degenerate;
  header["source"] = set.source;
  header["layout"] =
      "members are dB x dA matrices, row-major [re, im] pairs; state "
      "amplitudes a(k, l') = member(l', k) / sqrt(dA)";
  header["tool_version"] = kVersion;

  Json j;
  j["header"] = std::move(header);
  Json members = Json::array();
  for (const Matrix& m : set.members) members.push_back(matrix_to_json(m));
  j["members"] = std::move(members);
  return j;
}

CandidateUMEB basis_from_json(const Json& j) {
  CandidateUMEB set;
  try {
    const Json& header = j.at("header");
    set.dA = header.at("dA").get<Index>();
    set.dB = header.at("dB").get<Index>();
    if (set.dA <= 0 || set.dB <= 0) {
      throw IoError("basis: dimensions must be positive");
    }
    if (!header.at("theorem").is_null()) {
      const std::string t = header.at("theorem").get<std::string>();
      set.lift = lift_kind_from_string(t);
      if (!set.lift) throw IoError("basis: unknown theorem tag '" + t + "'");
      set.params.p = header.value("p", 1);
      set.params.q = header.value("q", 1);
      set.params.d = header.value("d", 1);
      if (set.params.p < 1 || set.params.q < 1 || set.params.d < 1) {
        throw IoError("basis: lift parameters must be positive");
      }
    }
    set.seed_provenance = header.value("seed_provenance", std::string());
    set.source = header.value("source", std::string());
    set.degenerate = header.value("degenerate_lift", false);
    if (header.contains("tags") && header.at("tags").is_array()) {
      set.tags = header.at("tags").get<std::vector<std::string>>();
    }
    if (header.contains("expected_count") &&
        !header.at("expected_count").is_null()) {
      set.expected_count = header.at("expected_count").get<long>();
    }
    for (const Json& m : j.at("members")) {
      set.members.push_back(matrix_from_json(m, set.dB, set.dA));
    }
  } catch (const Json::exception& e) {
    throw IoError(std::string("basis: malformed JSON: ") + e.what());
  }
  if (!set.tags.empty() && set.tags.size() != set.members.size()) {
    throw IoError("basis: tag count differs from member count");
  }
  return set;
}

void save_basis(const CandidateUMEB& set, const std::filesystem::path& path) {
  write_json_atomic(basis_to_json(set), path);
}

CandidateUMEB load_basis(const std::filesystem::path& path) {
  return basis_from_json(read_json(path));
}

namespace {

Json tolerance_to_json(const Tolerance& tol) {
  Json j;
  j["eps_orth"] = tol.eps_orth;
  j["eps_sv"] = tol.eps_sv;
  j["eps_rank"] = tol.eps_rank;
  return j;
}

}  // namespace

Json report_to_json(const VerificationReport& report, int restarts) {
  Json j;
  j["tool_version"] = kVersion;
  j["rng_seed"] = report.rng_seed;
  j["tolerances"] = tolerance_to_json(report.tolerance);
  j["orthogonality_max_residual"] = report.orthogonality_max_residual;
  j["orthogonality_pass"] = report.orthogonality_pass;
  j["sv1_max_deviation"] = report.sv1_max_deviation;
  j["sv1_pass"] = report.sv1_pass;
  j["member_count"] = report.member_count;
  j["expected_count"] =
      report.expected_count ? Json(*report.expected_count) : Json(nullptr);
  j["complement_dim"] = report.complement_dim;
  j["certificate_status"] = to_string(report.structural_certificate.status);
  j["certificate_s_projection_residual"] =
      report.structural_certificate.s_projection_residual;
  j["certificate_block_orthogonality_max"] =
      report.structural_certificate.block_orthogonality_max;
  j["certificate_vandermonde_min_singular"] =
      report.structural_certificate.vandermonde_min_singular;
  j["certificate_detail"] = report.structural_certificate.detail;
  j["falsifier_applicable"] = report.falsifier.applicable;
  j["falsifier_restarts"] = restarts;
  j["falsifier_best_min_singular"] = report.falsifier.best_min_singular;
  j["falsifier_converged"] = report.falsifier.converged;
  j["falsifier_best_witness"] = report.falsifier.best_witness.size() > 0
                                    ? matrix_to_json(report.falsifier.best_witness)
                                    : Json(nullptr);
  j["unextendibility_verdict"] = to_string(report.verdict);
  j["all_pass"] = report.all_pass();
  j["notes"] = report.notes;
  return j;
}

Json profile_to_json(const ComplementProfile& profile, const Tolerance& tol) {
  Json j;
  j["tool_version"] = kVersion;
  j["rng_seed"] = profile.rng_seed;
  j["samples"] = profile.samples;
  j["tolerances"] = tolerance_to_json(tol);
  j["complement_dim"] = profile.complement_dim;
  j["max_rank_found"] = profile.max_rank_found;
  Json hist;
  for (const auto& [rank, count] : profile.rank_histogram) {
    hist[std::to_string(rank)] = count;
  }
  j["rank_histogram"] = std::move(hist);
  j["witness_max_rank"] = profile.witness_max_rank.size() > 0
                              ? matrix_to_json(profile.witness_max_rank)
                              : Json(nullptr);
  j["witness_rows"] = profile.witness_max_rank.rows();
  j["witness_cols"] = profile.witness_max_rank.cols();
  j["rho_perp_trace"] = profile.rho_perp_trace;
  j["rho_perp_psd_min_eig"] = profile.rho_perp_psd_min_eig;
  return j;
}

void write_json_atomic(const Json& j, const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  const fs::path dir =
      path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("rename to '" + path.string() + "' failed: " +
                        ec.message());
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw IoError("parse error in '" + path.string() + "': " + e.what());
  }
}

}  // namespace umeb
