#ifndef UMEB_VERIFIER_HPP
#define UMEB_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umeb/lift.hpp"
#include "umeb/matrix_core.hpp"
#include "umeb/random.hpp"
#include "umeb/seeds.hpp"

namespace umeb {

struct OrthonormalityCheck {
  double max_residual = 0.0;
  bool pass = false;
};

struct Sv1Check {
  double max_deviation = 0.0;
  bool pass = false;
};

enum class CertificateStatus { PROVEN, NOT_APPLICABLE, FAILED };

std::string to_string(CertificateStatus s);

/// Result of replaying the lift proofs as numerical checks: complement
/// containment in the block-diagonal space S, block orthogonality against
/// the seed, and invertibility of the root-of-unity matrix H that forces
/// the block traces to vanish.
struct CertificateResult {
  CertificateStatus status = CertificateStatus::NOT_APPLICABLE;
  double s_projection_residual = 0.0;
  double block_orthogonality_max = 0.0;
  double vandermonde_min_singular = 0.0;
  std::string detail;
};

/// Outcome of the randomized search for an SV1 matrix in the complement.
/// Elements are normalized to Tr(X^dag X) = dA, under which
/// sigma_min(X) = 1 exactly when X is SV1; a genuine UMEB keeps
/// best_min_singular strictly below 1.
struct FalsifierResult {
  int restarts = 0;
  double best_min_singular = 0.0;
  Matrix best_witness;
  bool converged = false;
  bool applicable = true;  // false when the complement is empty
};

struct FalsifierOptions {
  int restarts = 200;
  int max_iterations = 500;
  std::uint64_t rng_seed = kDefaultRngSeed;
  double improve_tol = 1e-12;  // stall threshold
  int stall_window = 20;       // iterations without improvement => converged
};

enum class UnextendibilityVerdict {
  PROVEN,
  UNREFUTED_WITH_MARGIN,
  REFUTED,
  NOT_APPLICABLE
};

std::string to_string(UnextendibilityVerdict v);

/// Aggregated verdicts for the three defining conditions of a UMEB:
/// maximal entanglement of every member (sv1), orthonormality, and
/// unextendibility of the complement.
struct VerificationReport {
  double orthogonality_max_residual = 0.0;
  bool orthogonality_pass = false;
  double sv1_max_deviation = 0.0;
  bool sv1_pass = false;
  long member_count = 0;
  std::optional<long> expected_count;
  long complement_dim = -1;
  CertificateResult structural_certificate;
  FalsifierResult falsifier;
  UnextendibilityVerdict verdict = UnextendibilityVerdict::NOT_APPLICABLE;
  std::vector<std::string> notes;
  Tolerance tolerance;
  std::uint64_t rng_seed = kDefaultRngSeed;

  /// True when every applicable check passed.
  bool all_pass() const;
};

/// Max over pairs of |Tr(B_i^dag B_j) - dA delta_ij|; passes when the
/// residual stays within eps_orth * dA.
OrthonormalityCheck verify_orthonormal(const CandidateUMEB& set,
                                       const Tolerance& tol = {});

/// Max over members and singular values of |sigma - 1|.
Sv1Check verify_sv1(const CandidateUMEB& set, const Tolerance& tol = {});

/// Replays the lift proof on the actual complement of the set:
/// (1) every complement basis element lies in the block-diagonal space S,
/// (2) its diagonal blocks are trace-orthogonal to every seed member,
/// (3) the root-of-unity system H X_j = 0 that enforces (2) is invertible
///     (minimum singular value reported; sqrt(p) for T1, sqrt(d) for T2).
/// PROVEN then inherits unextendibility from the seed, whose complement
/// contains no unitary / SV1 matrix.
CertificateResult structural_certificate(const CandidateUMEB& set,
                                         const SeedBasis& seed,
                                         const LiftParams& params,
                                         LiftKind which,
                                         const Tolerance& tol = {});

/// Randomized multi-restart ascent of sigma_min over the complement span,
/// normalized to Tr(X^dag X) = dA. Projected subgradient steps through the
/// minimal singular pair with step halving; deterministic for a fixed
/// rng seed.
FalsifierResult falsify_unextendibility(const CandidateUMEB& set,
                                        const FalsifierOptions& opts = {});

FalsifierResult falsify_unextendibility(const CandidateUMEB& set,
                                        int restarts,
                                        std::uint64_t rng_seed);

/// Runs every check. The structural certificate runs when seed and lift
/// provenance are available; otherwise the verdict falls back to the
/// falsifier margin (UNREFUTED_WITH_MARGIN at best, never PROVEN).
VerificationReport full_report(const CandidateUMEB& set,
                               const SeedBasis* seed = nullptr,
                               const Tolerance& tol = {},
                               const FalsifierOptions& opts = {});

}  // namespace umeb

#endif  // UMEB_VERIFIER_HPP
