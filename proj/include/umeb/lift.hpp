#ifndef UMEB_LIFT_HPP
#define UMEB_LIFT_HPP

#include <optional>
#include <string>
#include <vector>

#include "umeb/seeds.hpp"
#include "umeb/types.hpp"

namespace umeb {

/// The two tensor-lifting constructions, named by their interface tokens.
/// T1 lifts a square d x d seed into M_{qd x pd}; T2 lifts a rectangular
/// q x p seed by a factor d.
enum class LiftKind { T1, T2 };

std::string to_string(LiftKind kind);
std::optional<LiftKind> lift_kind_from_string(const std::string& s);

struct LiftParams {
  int p = 1;
  int q = 1;
  int d = 1;
};

/// Candidate unextendible maximally entangled basis: an ordered family of
/// dB x dA matrices, each the matrix side of a basis member, with
/// per-member family tags and construction provenance.
struct CandidateUMEB {
  Index dA = 0;
  Index dB = 0;
  std::vector<Matrix> members;
  std::vector<std::string> tags;
  std::string source;
  std::optional<LiftKind> lift;
  LiftParams params;          // meaningful only when lift is set
  std::string seed_provenance;
  std::optional<long> expected_count;  // lift formula value at build time
  bool degenerate = false;    // p=q=1 (T1) or d=1 (T2) passthrough

  long count() const { return static_cast<long>(members.size()); }
};

/// Member count the lift formulas promise: pqd^2 - p(d^2 - N) for T1,
/// pqd^2 - d(pq - N) for T2, with N the seed size.
long expected_member_count(LiftKind kind, const LiftParams& params,
                           int seed_size);

/// T1: from an N-member unextendible unitary basis {W_j} of M_{d x d},
/// builds the pqd^2 - p(d^2 - N) member family
///   C1 = { V_{k0} (x) W_j   : k in [p], j in [N] }
///   C2 = { V_{kl} (x) U_{nm}: k in [p], 1 <= l <= q-1, n,m in [d] }
/// in M_{qd x pd}, p <= q. With p = q = 1 the family degenerates to the
/// seed itself (flagged, not an error).
CandidateUMEB lift_square_seed(const SeedBasis& seed, int p, int q);

/// T2: from an N-member unextendible SV1 basis {W_j} of M_{q x p}, builds
/// the pqd^2 - d(pq - N) member family
///   C1 = { U_{n0} (x) W_j   : n in [d], j in [N] }
///   C2 = { U_{nm} (x) V_{kl}: n in [d], 1 <= m <= d-1, k in [p], l in [q] }
/// in M_{qd x pd}. A square UUB seed is accepted as the p = q case.
/// With d = 1 the family degenerates to the seed itself.
CandidateUMEB lift_rect_seed(const SeedBasis& seed, int d);

/// Dispatch on the interface token; T1 takes (p, q), T2 takes d.
CandidateUMEB lift(LiftKind kind, const SeedBasis& seed,
                   const LiftParams& params);

}  // namespace umeb

#endif  // UMEB_LIFT_HPP
