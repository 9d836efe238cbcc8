#ifndef UMEB_IO_HPP
#define UMEB_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "umeb/lift.hpp"
#include "umeb/schmidt.hpp"
#include "umeb/seeds.hpp"
#include "umeb/verifier.hpp"

namespace umeb {

using Json = nlohmann::ordered_json;

/// Matrix <-> JSON: row-major list of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Index rows, Index cols);

/// Seed files: { "kind", "rows", "cols", "members", "provenance" }.
/// Loading re-validates every SeedBasis invariant and rejects files whose
/// members fail the shape / sv1 / orthogonality / completeness checks.
Json seed_to_json(const SeedBasis& seed);
SeedBasis seed_from_json(const Json& j, const Tolerance& tol = {});

/// Parses without invariant validation (catalog uses this to report each
/// failed check instead of stopping at the first).
SeedBasis parse_seed_unchecked(const Json& j);
void save_seed(const SeedBasis& seed, const std::filesystem::path& path);
SeedBasis load_seed(const std::filesystem::path& path,
                    const Tolerance& tol = {});

/// Basis files: { "header": { dA, dB, theorem, seed_provenance, tags, p, q,
/// d, member_count, expected_count, ... }, "members": [...] }.
Json basis_to_json(const CandidateUMEB& set);
CandidateUMEB basis_from_json(const Json& j);
void save_basis(const CandidateUMEB& set, const std::filesystem::path& path);
CandidateUMEB load_basis(const std::filesystem::path& path);

/// Flat report / profile JSON embedding tool version, tolerances and the
/// rng seed, so numerical verdicts are reproducible from the file alone.
Json report_to_json(const VerificationReport& report, int restarts);
Json profile_to_json(const ComplementProfile& profile, const Tolerance& tol);

/// Serializes with a trailing newline and writes atomically
/// (temp file + rename).
void write_json_atomic(const Json& j, const std::filesystem::path& path);

Json read_json(const std::filesystem::path& path);

}  // namespace umeb

#endif  // UMEB_IO_HPP
