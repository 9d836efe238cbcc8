#include "umeb/verifier.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace umeb {

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::PROVEN: return "PROVEN";
    case CertificateStatus::NOT_APPLICABLE: return "NOT_APPLICABLE";
    case CertificateStatus::FAILED: return "FAILED";
  }
  return "FAILED";
}

std::string to_string(UnextendibilityVerdict v) {
  switch (v) {
    case UnextendibilityVerdict::PROVEN: return "PROVEN";
    case UnextendibilityVerdict::UNREFUTED_WITH_MARGIN:
      return "UNREFUTED_WITH_MARGIN";
    case UnextendibilityVerdict::REFUTED: return "REFUTED";
    case UnextendibilityVerdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

OrthonormalityCheck verify_orthonormal(const CandidateUMEB& set,
                                       const Tolerance& tol) {
  OrthonormalityCheck check;
  const Index n = static_cast<Index>(set.members.size());
  for (Index i = 0; i < n; ++i) {
    const Matrix& a = set.members[i];
    if (a.rows() != set.dB || a.cols() != set.dA) {
      throw DimensionError("verify_orthonormal: member " + std::to_string(i) +
                           " is not dB x dA");
    }
    for (Index j = i; j < n; ++j) {
      const Complex g = hs_inner(a, set.members[j]);
      const Complex expect =
          (i == j) ? Complex(static_cast<double>(set.dA), 0) : Complex(0, 0);
      check.max_residual = std::max(check.max_residual, std::abs(g - expect));
    }
  }
  check.pass =
      check.max_residual <= tol.eps_orth * static_cast<double>(set.dA);
  return check;
}

Sv1Check verify_sv1(const CandidateUMEB& set, const Tolerance& tol) {
  Sv1Check check;
  for (const Matrix& m : set.members) {
    const RealVector sv = singular_values(m);
    for (Index i = 0; i < sv.size(); ++i) {
      check.max_deviation = std::max(check.max_deviation,
                                     std::abs(sv(i) - 1.0));
    }
  }
  check.pass = check.max_deviation <= tol.eps_sv;
  return check;
}

namespace {

// Root-of-unity system from the lift proofs: T1 couples the p diagonal
// blocks through H(k, h) = w_p^{-kh}, T2 the d blocks through
// H(n, h) = w_d^{nh}. Either is sqrt(dim) times a unitary DFT matrix.
Matrix vandermonde_matrix(LiftKind which, int dim) {
  const double sign = which == LiftKind::T1 ? -1.0 : 1.0;
  const double two_pi = 2.0 * 3.141592653589793238462643383279502884;
  Matrix h(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const long e = (static_cast<long>(r) * c) % dim;
      h(r, c) = std::polar(1.0, sign * two_pi * static_cast<double>(e) /
                                    static_cast<double>(dim));
    }
  }
  return h;
}

}  // namespace

CertificateResult structural_certificate(const CandidateUMEB& set,
                                         const SeedBasis& seed,
                                         const LiftParams& params,
                                         LiftKind which,
                                         const Tolerance& tol) {
  CertificateResult cert;
  if (!set.lift.has_value()) {
    cert.status = CertificateStatus::NOT_APPLICABLE;
    cert.detail = "set has no lift provenance";
    return cert;
  }

  const int p = params.p, q = params.q, d = params.d;
  const int seed_rows = which == LiftKind::T1 ? d : q;
  const int seed_cols = which == LiftKind::T1 ? d : p;
  if (set.dA != static_cast<Index>(p) * d ||
      set.dB != static_cast<Index>(q) * d) {
    throw ArgumentError("structural_certificate: set shape does not match "
                        "lift parameters");
  }
  if (seed.d_large != seed_rows || seed.d_small != seed_cols) {
    throw ArgumentError("structural_certificate: seed shape does not match "
                        "lift parameters");
  }

  std::string detail;
  const long expected = expected_member_count(which, params, seed.size());
  if (set.count() != expected) {
    detail = "member count " + std::to_string(set.count()) +
             " differs from the lift formula value " +
             std::to_string(expected);
  }

  // Blocks of the proof layout: T1 reads the p diagonal d x d blocks of the
  // top pd rows, T2 the d diagonal q x p blocks.
  const int n_blocks = which == LiftKind::T1 ? p : d;
  const Index block_rows = which == LiftKind::T1 ? d : q;
  const Index block_cols = which == LiftKind::T1 ? d : p;

  const ComplementSpace comp = orthonormal_complement(set.members, tol);
  for (const Matrix& e : comp.basis) {
    Matrix s_part = Matrix::Zero(set.dB, set.dA);
    for (int h = 0; h < n_blocks; ++h) {
      s_part.block(h * block_rows, h * block_cols, block_rows, block_cols) =
          e.block(h * block_rows, h * block_cols, block_rows, block_cols);
    }
    cert.s_projection_residual =
        std::max(cert.s_projection_residual, (e - s_part).norm());
    for (int h = 0; h < n_blocks; ++h) {
      const Matrix block =
          e.block(h * block_rows, h * block_cols, block_rows, block_cols);
      for (const Matrix& w : seed.members) {
        cert.block_orthogonality_max =
            std::max(cert.block_orthogonality_max, std::abs(hs_inner(block, w)));
      }
    }
  }

  const Matrix h = vandermonde_matrix(which, n_blocks);
  const RealVector hsv = singular_values(h);
  cert.vandermonde_min_singular = hsv(hsv.size() - 1);

  const bool ok = cert.s_projection_residual <= tol.eps_orth &&
                  cert.block_orthogonality_max <= tol.eps_orth &&
                  cert.vandermonde_min_singular > 0 && detail.empty();
  cert.status = ok ? CertificateStatus::PROVEN : CertificateStatus::FAILED;
  if (!ok && detail.empty()) {
    detail = "complement escapes the proof structure (s_projection_residual="
             + std::to_string(cert.s_projection_residual) +
             ", block_orthogonality_max=" +
             std::to_string(cert.block_orthogonality_max) + ")";
  }
  cert.detail = detail;
  return cert;
}

namespace {

struct SigmaMinPair {
  double sigma = 0.0;
  Vector u;
  Vector v;
  Matrix sv1_snap;  // U V^dag, the nearest matrix with all sigma = 1
};

SigmaMinPair sigma_min_pair(const Matrix& x) {
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Index last = svd.singularValues().size() - 1;
  return {svd.singularValues()(last), svd.matrixU().col(last),
          svd.matrixV().col(last), svd.matrixU() * svd.matrixV().adjoint()};
}

Matrix synthesize(const ComplementSpace& comp, const Vector& coeff) {
  Matrix x = Matrix::Zero(comp.rows, comp.cols);
  for (Index i = 0; i < comp.dim(); ++i) x += coeff(i) * comp.basis[i];
  return x;
}

Vector project_coefficients(const ComplementSpace& comp, const Matrix& x) {
  Vector c(comp.dim());
  for (Index i = 0; i < comp.dim(); ++i) c(i) = hs_inner(comp.basis[i], x);
  return c;
}

}  // namespace

FalsifierResult falsify_unextendibility(const CandidateUMEB& set,
                                        const FalsifierOptions& opts) {
  FalsifierResult result;
  result.restarts = opts.restarts;
  if (opts.restarts < 1) throw ArgumentError("falsifier: restarts must be >= 1");

  const ComplementSpace comp = orthonormal_complement(set.members);
  if (comp.dim() == 0) {
    result.applicable = false;
    result.converged = true;
    return result;
  }
  const Index nc = comp.dim();
  const double target_norm = std::sqrt(static_cast<double>(set.dA));

  for (int restart = 0; restart < opts.restarts; ++restart) {
    Rng rng = Rng::substream(opts.rng_seed, static_cast<std::uint64_t>(restart));
    Vector coeff = rng.complex_gaussian_vector(nc);
    coeff *= target_norm / coeff.norm();

    Matrix x = synthesize(comp, coeff);
    SigmaMinPair cur = sigma_min_pair(x);
    double step = 0.25;
    bool converged = false;
    int stall = 0;

    for (int it = 0; it < opts.max_iterations; ++it) {
      if (1.0 - cur.sigma < 1e-9) {  // global optimum reached
        converged = true;
        break;
      }
      // Ascent direction of sigma_min through its singular pair, projected
      // onto the complement's coefficient space.
      const Matrix grad_matrix = cur.u * cur.v.adjoint();
      const Vector grad = project_coefficients(comp, grad_matrix);
      const double gnorm = grad.norm();
      if (gnorm < 1e-15) {
        converged = true;
        break;
      }
      Vector trial = coeff + (step / gnorm) * grad;
      trial *= target_norm / trial.norm();
      SigmaMinPair next = sigma_min_pair(synthesize(comp, trial));

      // Acceleration near the all-singular-values-equal peak, where the
      // single-pair subgradient zigzags: snap to the nearest SV1 matrix and
      // project back onto the complement span.
      Vector snap = project_coefficients(comp, cur.sv1_snap);
      const double snap_norm = snap.norm();
      if (snap_norm > 1e-15) {
        snap *= target_norm / snap_norm;
        const SigmaMinPair snapped = sigma_min_pair(synthesize(comp, snap));
        if (snapped.sigma > next.sigma) {
          next = snapped;
          trial.swap(snap);
        }
      }

      if (next.sigma > cur.sigma) {
        stall = (next.sigma - cur.sigma < opts.improve_tol) ? stall + 1 : 0;
        coeff = trial;
        cur = next;
        step = std::min(step * 1.5, 1.0);
      } else {
        step *= 0.5;
        ++stall;
        if (step < 1e-14) {
          converged = true;
          break;
        }
      }
      if (stall >= opts.stall_window) {
        converged = true;
        break;
      }
    }

    if (cur.sigma > result.best_min_singular ||
        result.best_witness.size() == 0) {
      result.best_min_singular = cur.sigma;
      result.best_witness = synthesize(comp, coeff);
      result.converged = converged;
    }
  }
  return result;
}

FalsifierResult falsify_unextendibility(const CandidateUMEB& set,
                                        int restarts,
                                        std::uint64_t rng_seed) {
  FalsifierOptions opts;
  opts.restarts = restarts;
  opts.rng_seed = rng_seed;
  return falsify_unextendibility(set, opts);
}

bool VerificationReport::all_pass() const {
  if (!orthogonality_pass || !sv1_pass) return false;
  if (expected_count && *expected_count != member_count) return false;
  if (structural_certificate.status == CertificateStatus::FAILED) return false;
  if (verdict == UnextendibilityVerdict::REFUTED) return false;
  return true;
}

VerificationReport full_report(const CandidateUMEB& set, const SeedBasis* seed,
                               const Tolerance& tol,
                               const FalsifierOptions& opts) {
  VerificationReport report;
  report.tolerance = tol;
  report.rng_seed = opts.rng_seed;
  report.member_count = set.count();
  report.expected_count = set.expected_count;
  if (seed != nullptr && set.lift.has_value()) {
    report.expected_count =
        expected_member_count(*set.lift, set.params, seed->size());
  }

  const OrthonormalityCheck ortho = verify_orthonormal(set, tol);
  report.orthogonality_max_residual = ortho.max_residual;
  report.orthogonality_pass = ortho.pass;

  const Sv1Check sv1 = verify_sv1(set, tol);
  report.sv1_max_deviation = sv1.max_deviation;
  report.sv1_pass = sv1.pass;

  const Index full_dim = set.dA * set.dB;
  if (ortho.pass) {
    report.complement_dim = full_dim - set.count();
  } else {
    report.notes.push_back(
        "orthonormality failed; complement and unextendibility checks "
        "skipped");
    report.complement_dim = -1;
    report.falsifier.applicable = false;
    report.verdict = UnextendibilityVerdict::NOT_APPLICABLE;
    return report;
  }

  if (report.complement_dim == 0) {
    report.notes.push_back(
        "complete basis, unextendibility not applicable");
    report.structural_certificate.status = CertificateStatus::NOT_APPLICABLE;
    report.falsifier.applicable = false;
    report.falsifier.converged = true;
    report.falsifier.restarts = opts.restarts;
    report.verdict = UnextendibilityVerdict::NOT_APPLICABLE;
    return report;
  }

  if (set.lift.has_value() && seed != nullptr) {
    try {
      report.structural_certificate =
          structural_certificate(set, *seed, set.params, *set.lift, tol);
    } catch (const ArgumentError& e) {
      report.structural_certificate.status = CertificateStatus::FAILED;
      report.structural_certificate.detail = e.what();
    }
  } else if (set.lift.has_value()) {
    report.structural_certificate.status = CertificateStatus::NOT_APPLICABLE;
    report.structural_certificate.detail =
        "seed unavailable; structural certificate skipped";
    report.notes.push_back(
        "lift provenance present but no seed supplied; only the falsifier "
        "ran");
  }

  report.falsifier = falsify_unextendibility(set, opts);

  if (report.falsifier.applicable &&
      report.falsifier.best_min_singular >= 1.0 - 1e-6) {
    report.verdict = UnextendibilityVerdict::REFUTED;
    report.notes.push_back(
        "falsifier found an SV1 matrix in the complement (sigma_min = " +
        std::to_string(report.falsifier.best_min_singular) + ")");
  } else if (report.structural_certificate.status ==
             CertificateStatus::PROVEN) {
    report.verdict = UnextendibilityVerdict::PROVEN;
  } else {
    report.verdict = UnextendibilityVerdict::UNREFUTED_WITH_MARGIN;
  }

  if (set.lift == LiftKind::T2) {
    report.notes.push_back(
        "T2 Gram normalization: members satisfy Tr(B^dag B) = pd (= dA); "
        "a qd normalization holds only when p = q");
  }
  return report;
}

}  // namespace umeb
