#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "oracles.hpp"
#include "umeb/correspondence.hpp"
#include "umeb/generators.hpp"
#include "umeb/lift.hpp"
#include "umeb/schmidt.hpp"

using namespace umeb;

namespace {

CandidateUMEB bell_candidate() {
  CandidateUMEB set;
  set.dA = 2;
  set.dB = 2;
  set.members.push_back(Matrix::Identity(2, 2));  // the Bell state
  set.source = "single Bell state";
  return set;
}

}  // namespace

TEST_CASE("rho_perp of example 1: trace one, flat spectrum, rank 6") {
  const CandidateUMEB set = lift_square_seed(bravyi_smolin_seed(), 2, 3);
  const Matrix rho = rho_perp(set);
  REQUIRE(rho.rows() == 54);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
  const RealVector ev = eig.eigenvalues();
  int nonzero = 0;
  for (Index i = 0; i < ev.size(); ++i) {
    CHECK(ev(i) > -1e-12);
    if (ev(i) > 1e-12) {
      ++nonzero;
      CHECK(ev(i) == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    }
  }
  CHECK(nonzero == 6);
}

TEST_CASE("rho_perp of a single Bell state") {
  const Matrix rho = rho_perp(bell_candidate());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
  const RealVector ev = eig.eigenvalues();
  CHECK(ev(0) == doctest::Approx(0.0).epsilon(1e-14));
  for (int i = 1; i < 4; ++i) {
    CHECK(ev(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("member states are null vectors of rho_perp") {
  const CandidateUMEB set = lift_rect_seed(two_by_three_seed(), 3);
  const Matrix rho = rho_perp(set);
  for (const Matrix& m : set.members) {
    const Vector psi = matrix_to_state(m).amplitudes;
    CHECK((rho * psi).norm() < 1e-12);
  }
}

TEST_CASE("rho_perp rejects a complete basis") {
  CandidateUMEB set;
  set.dA = 3;
  set.dB = 3;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) set.members.push_back(clock_shift(3, n, m));
  CHECK_THROWS_AS(rho_perp(set), ArgumentError);
}

TEST_CASE("complement rank profile separates the two 48-member examples") {
  const CandidateUMEB ex1 = lift_square_seed(bravyi_smolin_seed(), 2, 3);
  const ComplementProfile p1 = complement_rank_profile(ex1, 2000, 99);
  CHECK(p1.complement_dim == 6);
  CHECK(p1.max_rank_found == 4);
  CHECK(oracles::svd_rank(p1.witness_max_rank) == 4);
  CHECK(p1.rho_perp_trace == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p1.rho_perp_psd_min_eig > -1e-12);

  const CandidateUMEB ex2 = lift_rect_seed(two_by_three_seed(), 3);
  const ComplementProfile p2 = complement_rank_profile(ex2, 2000, 99);
  CHECK(p2.complement_dim == 6);
  CHECK(p2.max_rank_found == 3);
  CHECK(oracles::svd_rank(p2.witness_max_rank) == 3);
  // no sampled element exceeds rank 3
  for (const auto& [rank, count] : p2.rank_histogram) {
    CHECK(rank <= 3);
  }

  // rank deficit: below min(dA, dB) for both
  CHECK(p1.max_rank_found < 6);
  CHECK(p2.max_rank_found < 6);
}

TEST_CASE("complement elements map to states orthogonal to all members") {
  const CandidateUMEB set = lift_square_seed(bravyi_smolin_seed(), 2, 3);
  const ComplementSpace comp = orthonormal_complement(set.members);
  std::vector<BipartiteState> member_states;
  for (const Matrix& m : set.members) member_states.push_back(matrix_to_state(m));
  for (const Matrix& e : comp.basis) {
    const BipartiteState es = matrix_to_state(e);
    for (const BipartiteState& ms : member_states) {
      CHECK(std::abs(state_inner(ms, es)) < 1e-12);
    }
  }
}

TEST_CASE("bell complement reaches ranks 1 and 2") {
  const ComplementProfile p = complement_rank_profile(bell_candidate(), 500, 7);
  CHECK(p.complement_dim == 3);
  CHECK(p.max_rank_found == 2);
  CHECK(p.rank_histogram.count(1) == 1);  // elementary off-diagonals
  CHECK(p.rank_histogram.count(2) == 1);
}

TEST_CASE("profile with samples = 0 is the basis sweep only") {
  const CandidateUMEB ex1 = lift_square_seed(bravyi_smolin_seed(), 2, 3);
  const ComplementProfile p = complement_rank_profile(ex1, 0, 1);
  long scanned = 0;
  for (const auto& [rank, count] : p.rank_histogram) scanned += count;
  CHECK(scanned == p.complement_dim);
}

TEST_CASE("seed complement rank bounds") {
  CHECK(seed_complement_rank_bound(bravyi_smolin_seed(), 1000) == 2);
  CHECK(seed_complement_rank_bound(two_by_three_seed(), 1000) == 1);

  SeedBasis full;  // complete clock-shift basis: empty complement
  full.kind = SeedKind::UUB;
  full.d_small = 3;
  full.d_large = 3;
  full.provenance = "full UB";
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) full.members.push_back(clock_shift(3, n, m));
  CHECK(seed_complement_rank_bound(full, 100) == 0);
}

TEST_CASE("lift/seed max-rank relation at desk scale") {
  // T1: p * seed bound (2 * 2 = 4); T2: d * seed bound (3 * 1 = 3).
  const int seed_bound_bs = seed_complement_rank_bound(bravyi_smolin_seed(), 500);
  const int seed_bound_tt = seed_complement_rank_bound(two_by_three_seed(), 500);
  const ComplementProfile p1 = complement_rank_profile(
      lift_square_seed(bravyi_smolin_seed(), 2, 3), 500, 5);
  const ComplementProfile p2 = complement_rank_profile(
      lift_rect_seed(two_by_three_seed(), 3), 500, 5);
  CHECK(p1.max_rank_found == 2 * seed_bound_bs);
  CHECK(p2.max_rank_found == 3 * seed_bound_tt);
}
