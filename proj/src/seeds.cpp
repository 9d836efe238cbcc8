#include "umeb/seeds.hpp"

#include <cmath>

#include "umeb/matrix_core.hpp"

namespace umeb {

std::string to_string(SeedKind kind) {
  return kind == SeedKind::UUB ? "UUB" : "USV1B";
}

namespace {

SeedCheckResult check_shape(const SeedBasis& seed) {
  SeedCheckResult res{"shape", true, "all members d_large x d_small, finite"};
  if (seed.d_small <= 0 || seed.d_large <= 0 || seed.d_small > seed.d_large) {
    return {"shape", false, "requires 0 < d_small <= d_large"};
  }
  if (seed.kind == SeedKind::UUB && seed.d_small != seed.d_large) {
    return {"shape", false, "UUB members must be square"};
  }
  if (seed.members.empty()) {
    return {"shape", false, "seed has no members"};
  }
  for (const Matrix& w : seed.members) {
    if (w.rows() != seed.d_large || w.cols() != seed.d_small) {
      return {"shape", false, "member is not d_large x d_small"};
    }
    if (!w.allFinite()) {
      return {"shape", false, "member has non-finite entries"};
    }
  }
  return res;
}

SeedCheckResult check_sv1(const SeedBasis& seed, const Tolerance& tol) {
  for (int i = 0; i < seed.size(); ++i) {
    if (!is_sv1(seed.members[i], tol)) {
      return {"sv1", false, "member " + std::to_string(i) +
                                " has a singular value away from 1"};
    }
  }
  return {"sv1", true, "all singular values within eps_sv of 1"};
}

SeedCheckResult check_orthogonality(const SeedBasis& seed,
                                    const Tolerance& tol) {
  const int n = seed.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Complex g = hs_inner(seed.members[i], seed.members[j]);
      const Complex expect =
          (i == j) ? Complex(seed.d_small, 0) : Complex(0, 0);
      if (std::abs(g - expect) > tol.eps_orth) {
        return {"orthogonality",
                false,
                "Tr(W_" + std::to_string(i) + "^dag W_" + std::to_string(j) +
                    ") deviates by " + std::to_string(std::abs(g - expect))};
      }
    }
  }
  return {"orthogonality", true, "Gram matrix equals d_small * I"};
}

SeedCheckResult check_completeness(const SeedBasis& seed) {
  const int bound = seed.d_small * seed.d_large;
  if (seed.size() >= bound) {
    return {"completeness", false,
            "seed must have fewer than d_small*d_large = " +
                std::to_string(bound) + " members, got " +
                std::to_string(seed.size())};
  }
  return {"completeness", true,
          std::to_string(seed.size()) + " < " + std::to_string(bound)};
}

}  // namespace

std::vector<SeedCheckResult> run_seed_checks(const SeedBasis& seed,
                                             const Tolerance& tol) {
  std::vector<SeedCheckResult> results;
  results.push_back(check_shape(seed));
  if (!results.back().pass) {
    // shape failures make the numeric checks meaningless
    results.push_back({"sv1", false, "skipped (shape failed)"});
    results.push_back({"orthogonality", false, "skipped (shape failed)"});
    results.push_back(check_completeness(seed));
    return results;
  }
  results.push_back(check_sv1(seed, tol));
  results.push_back(check_orthogonality(seed, tol));
  results.push_back(check_completeness(seed));
  return results;
}

void validate_seed(const SeedBasis& seed, const Tolerance& tol) {
  for (const SeedCheckResult& res : run_seed_checks(seed, tol)) {
    if (!res.pass) throw ValidationError(res.check, res.message);
  }
}

SeedBasis bravyi_smolin_seed() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double norm = 1.0 / std::sqrt(1.0 + phi * phi);

  // Pairwise overlaps |<psi_i|psi_j>|^2 = 1/5 give
  // Tr(W_i^dag W_j) = 7/5 + (8/5) cos(theta); orthogonality fixes
  // cos(theta) = -7/8, sin(theta) = +sqrt(15)/8 for theta in (0, pi].
  const Complex phase(-7.0 / 8.0, std::sqrt(15.0) / 8.0);

  std::vector<Eigen::Vector3cd> psi(6);
  for (int axis = 0; axis < 3; ++axis) {
    for (int sign = 0; sign < 2; ++sign) {
      Eigen::Vector3cd v = Eigen::Vector3cd::Zero();
      v(axis) = norm;
      v((axis + 1) % 3) = (sign == 0 ? phi : -phi) * norm;
      psi[2 * axis + sign] = v;
    }
  }

  SeedBasis seed;
  seed.kind = SeedKind::UUB;
  seed.d_small = 3;
  seed.d_large = 3;
  seed.provenance = "builtin:bravyi-smolin";
  seed.members.reserve(6);
  for (const auto& v : psi) {
    seed.members.push_back(Matrix::Identity(3, 3) -
                           (Complex(1, 0) - phase) * (v * v.adjoint()));
  }
  return seed;
}

SeedBasis two_by_three_seed() {
  SeedBasis seed;
  seed.kind = SeedKind::USV1B;
  seed.d_small = 2;
  seed.d_large = 3;
  seed.provenance = "builtin:two-by-three";
  for (int s = 0; s < 4; ++s) {
    Matrix w = Matrix::Zero(3, 2);
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;
    if (s < 2) {
      w(0, 0) = 1.0;         // |0'><0|
      w(1, 1) = sign;        // +- |1'><1|
    } else {
      w(0, 1) = 1.0;         // |0'><1|
      w(1, 0) = sign;        // +- |1'><0|
    }
    seed.members.push_back(w);
  }
  return seed;
}

SeedBasis builtin_seed(const std::string& name) {
  std::string key = name;
  if (key.rfind("builtin:", 0) == 0) key = key.substr(8);
  if (key == "bravyi-smolin") return bravyi_smolin_seed();
  if (key == "two-by-three") return two_by_three_seed();
  throw ArgumentError("unknown builtin seed '" + name +
                      "' (available: bravyi-smolin, two-by-three)");
}

std::vector<std::string> builtin_seed_names() {
  return {"bravyi-smolin", "two-by-three"};
}

}  // namespace umeb
