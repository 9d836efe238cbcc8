#ifndef UMEB_SCHMIDT_HPP
#define UMEB_SCHMIDT_HPP

#include <cstdint>
#include <map>

#include "umeb/lift.hpp"
#include "umeb/matrix_core.hpp"
#include "umeb/random.hpp"

namespace umeb {

/// Rank statistics of the complementary subspace of a candidate basis,
/// together with the uniform complement state rho_perp. The maximum rank
/// bounds the Schmidt number reachable orthogonally to the basis.
struct ComplementProfile {
  long complement_dim = 0;
  int max_rank_found = 0;
  std::map<int, long> rank_histogram;  // rank -> count over scanned elements
  Matrix witness_max_rank;             // empty when the complement is empty
  double rho_perp_trace = 0.0;
  double rho_perp_psd_min_eig = 0.0;
  long samples = 0;
  std::uint64_t rng_seed = kDefaultRngSeed;
};

/// Uniform state on the complement of the basis span:
/// (I - sum_i |phi_i><phi_i|) / (dA dB - n), built through the
/// matrix/state correspondence. Requires an orthonormal, incomplete set.
Matrix rho_perp(const CandidateUMEB& set);

/// Scans the complement for reachable ranks: deterministic sweep over the
/// orthonormal complement basis plus `samples` random unit-norm complex
/// combinations (rank is generically maximal on a matrix subspace, so
/// sampling reaches the true maximum almost surely; the sweep supplies the
/// floor). samples = 0 gives the sweep-only lower bound.
ComplementProfile complement_rank_profile(const CandidateUMEB& set,
                                          long samples,
                                          std::uint64_t rng_seed = kDefaultRngSeed,
                                          const Tolerance& tol = {});

/// Maximum rank found in the complement of a seed basis (sweep + samples).
/// 0 for a complete basis with empty complement.
int seed_complement_rank_bound(const SeedBasis& seed, long samples,
                               std::uint64_t rng_seed = kDefaultRngSeed,
                               const Tolerance& tol = {});

}  // namespace umeb

#endif  // UMEB_SCHMIDT_HPP
