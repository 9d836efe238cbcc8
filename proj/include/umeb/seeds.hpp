#ifndef UMEB_SEEDS_HPP
#define UMEB_SEEDS_HPP

#include <string>
#include <vector>

#include "umeb/types.hpp"

namespace umeb {

/// Role of a seed set on the matrix side of the state/matrix
/// correspondence: UUB members are unitary (square), USV1B members
/// are rectangular with all singular values 1.
enum class SeedKind { UUB, USV1B };

std::string to_string(SeedKind kind);

/// A seed basis: mutually trace-orthogonal SV1 matrices of shape
/// d_large x d_small spanning strictly less than the full matrix space,
/// with nothing SV1 left in their orthogonal complement.
struct SeedBasis {
  SeedKind kind = SeedKind::UUB;
  int d_small = 0;  // column count (p, or d when square)
  int d_large = 0;  // row count (q, or d when square)
  std::vector<Matrix> members;
  std::string provenance;

  int size() const { return static_cast<int>(members.size()); }
};

struct SeedCheckResult {
  std::string check;
  bool pass = false;
  std::string message;
};

/// Runs the four SeedBasis invariant checks (shape, sv1, orthogonality,
/// completeness) and reports each outcome.
std::vector<SeedCheckResult> run_seed_checks(const SeedBasis& seed,
                                             const Tolerance& tol = {});

/// Checks every SeedBasis invariant and throws ValidationError naming the
/// first failed check: "shape", "sv1", "orthogonality", "completeness".
void validate_seed(const SeedBasis& seed, const Tolerance& tol = {});

/// The 6-member unextendible unitary basis of M_{3x3} built from the six
/// golden-ratio states |psi_j>, W_j = I - (1 - e^{i theta}) |psi_j><psi_j|
/// with cos(theta) = -7/8 (the unique phase in (0, pi] making the W_j
/// pairwise trace-orthogonal). Its 3-dimensional complement contains only
/// matrices of rank <= 2, hence no unitary.
SeedBasis bravyi_smolin_seed();

/// The 4-member unextendible SV1 basis of M_{3x2}:
///   W_{0,1} = |0'><0| +- |1'><1|,  W_{2,3} = |0'><1| +- |1'><0|.
/// Its complement is spanned by |2'><0| and |2'><1|, all of rank <= 1,
/// hence free of SV1 matrices.
SeedBasis two_by_three_seed();

/// Resolves "builtin:<name>" (or bare "<name>") to a built-in seed;
/// throws ArgumentError for unknown names.
SeedBasis builtin_seed(const std::string& name);

/// Names accepted by builtin_seed.
std::vector<std::string> builtin_seed_names();

}  // namespace umeb

#endif  // UMEB_SEEDS_HPP
