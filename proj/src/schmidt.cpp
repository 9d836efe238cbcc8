#include "umeb/schmidt.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

#include "umeb/correspondence.hpp"

namespace umeb {

Matrix rho_perp(const CandidateUMEB& set) {
  const Index full_dim = set.dA * set.dB;
  const long n = set.count();
  if (n >= full_dim) {
    throw ArgumentError(
        "rho_perp: complete basis has an empty complement (n = " +
        std::to_string(n) + " = dA*dB)");
  }
  if (n == 0) throw ArgumentError("rho_perp: empty set");

  Matrix rho = Matrix::Identity(full_dim, full_dim);
  for (const Matrix& m : set.members) {
    const Vector psi = matrix_to_state(m).amplitudes;
    rho -= psi * psi.adjoint();
  }
  rho /= static_cast<double>(full_dim - n);
  return rho;
}

namespace {

struct RankScan {
  std::map<int, long> histogram;
  int max_rank = 0;
  Matrix witness;
};

// Sweep the complement basis, then draw random unit-norm combinations.
RankScan scan_ranks(const ComplementSpace& comp, long samples,
                    std::uint64_t rng_seed, const Tolerance& tol) {
  RankScan scan;
  auto record = [&](const Matrix& x) {
    const int r = rank_of(x, tol);
    ++scan.histogram[r];
    if (r > scan.max_rank) {
      scan.max_rank = r;
      scan.witness = x;
    }
  };
  for (const Matrix& e : comp.basis) record(e);
  const Index nc = comp.dim();
  for (long s = 0; s < samples; ++s) {
    Rng rng = Rng::substream(rng_seed, static_cast<std::uint64_t>(s));
    Vector coeff = rng.complex_gaussian_vector(nc);
    coeff /= coeff.norm();
    Matrix x = Matrix::Zero(comp.rows, comp.cols);
    for (Index i = 0; i < nc; ++i) x += coeff(i) * comp.basis[i];
    record(x);
  }
  return scan;
}

}  // namespace

ComplementProfile complement_rank_profile(const CandidateUMEB& set,
                                          long samples,
                                          std::uint64_t rng_seed,
                                          const Tolerance& tol) {
  if (samples < 0) throw ArgumentError("complement_rank_profile: samples < 0");
  ComplementProfile profile;
  profile.samples = samples;
  profile.rng_seed = rng_seed;

  const Index full_dim = set.dA * set.dB;
  if (set.count() == full_dim) {
    profile.complement_dim = 0;
    return profile;
  }

  const ComplementSpace comp = orthonormal_complement(set.members, tol);
  profile.complement_dim = comp.dim();

  const RankScan scan = scan_ranks(comp, samples, rng_seed, tol);
  profile.rank_histogram = scan.histogram;
  profile.max_rank_found = scan.max_rank;
  profile.witness_max_rank = scan.witness;

  const Matrix rho = rho_perp(set);
  profile.rho_perp_trace = rho.trace().real();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
  profile.rho_perp_psd_min_eig = eig.eigenvalues()(0);
  return profile;
}

int seed_complement_rank_bound(const SeedBasis& seed, long samples,
                               std::uint64_t rng_seed, const Tolerance& tol) {
  if (seed.size() == seed.d_small * seed.d_large) return 0;
  const ComplementSpace comp = orthonormal_complement(seed.members, tol);
  if (comp.dim() == 0) return 0;
  return scan_ranks(comp, samples, rng_seed, tol).max_rank;
}

}  // namespace umeb
