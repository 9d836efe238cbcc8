#include "umeb/matrix_core.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace umeb {

RealVector singular_values(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  if (svd.info() != Eigen::Success) {
    throw NumericError("singular_values: SVD did not converge");
  }
  return svd.singularValues();
}

bool is_sv1(const Matrix& a, const Tolerance& tol) {
  const RealVector sv = singular_values(a);
  for (Index i = 0; i < sv.size(); ++i) {
    if (std::abs(sv(i) - 1.0) > tol.eps_sv) return false;
  }
  return sv.size() > 0;
}

int rank_of(const Matrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  const RealVector sv = singular_values(a);
  const double sigma_max = sv(0);
  if (sigma_max <= tol.eps_rank) return 0;  // zero matrix, absolute cutoff
  const double cut = tol.eps_rank * sigma_max;
  int r = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++r;
  }
  return r;
}

namespace {

// One modified Gram-Schmidt sweep of v against an orthonormal list.
void project_out(const std::vector<Matrix>& ortho, Matrix& v) {
  for (const Matrix& q : ortho) {
    v -= hs_inner(q, v) * q;
  }
}

}  // namespace

ComplementSpace orthonormal_complement(const std::vector<Matrix>& members,
                                       const Tolerance& tol) {
  if (members.empty()) {
    throw ArgumentError("orthonormal_complement: empty member set");
  }
  const Index rows = members.front().rows();
  const Index cols = members.front().cols();
  for (const Matrix& m : members) {
    if (m.rows() != rows || m.cols() != cols) {
      throw DimensionError("orthonormal_complement: members differ in shape");
    }
  }
  const Index full_dim = rows * cols;
  const Index n = static_cast<Index>(members.size());

  // Normalized copies; Gram conditioning decides linear independence.
  std::vector<Matrix> unit;
  unit.reserve(members.size());
  for (const Matrix& m : members) {
    const double nrm = hs_norm(m);
    if (!(nrm > 0)) {
      throw DegeneracyError("orthonormal_complement: zero member", 0.0);
    }
    unit.push_back(m / nrm);
  }
  Matrix gram(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gram(i, j) = hs_inner(unit[i], unit[j]);
  const RealVector gram_eigs = singular_values(gram);  // Hermitian PSD
  const double lambda_min = gram_eigs(gram_eigs.size() - 1);
  const double gram_cut = std::max(tol.eps_rank * tol.eps_rank, 1e-12) *
                          std::max(1.0, gram_eigs(0));
  if (n > full_dim || lambda_min < gram_cut) {
    throw DegeneracyError(
        "orthonormal_complement: dependent member set, smallest Gram "
        "eigenvalue " +
            std::to_string(lambda_min),
        lambda_min);
  }

  // Orthonormal basis of the span itself.
  std::vector<Matrix> span_basis;
  span_basis.reserve(members.size());
  for (Matrix v : unit) {
    project_out(span_basis, v);
    project_out(span_basis, v);
    span_basis.push_back(v / hs_norm(v));
  }

  // Extend with elementary matrices, row-major order.
  ComplementSpace comp;
  comp.rows = rows;
  comp.cols = cols;
  const double accept = 1e-6;
  for (Index r = 0; r < rows && comp.dim() < full_dim - n; ++r) {
    for (Index c = 0; c < cols && comp.dim() < full_dim - n; ++c) {
      Matrix v = Matrix::Zero(rows, cols);
      v(r, c) = 1.0;
      project_out(span_basis, v);
      project_out(comp.basis, v);
      if (hs_norm(v) <= accept) continue;
      // re-orthonormalization pass
      project_out(span_basis, v);
      project_out(comp.basis, v);
      comp.basis.push_back(v / hs_norm(v));
    }
  }
  if (comp.dim() != full_dim - n) {
    throw NumericError("orthonormal_complement: expected dimension " +
                       std::to_string(full_dim - n) + ", found " +
                       std::to_string(comp.dim()));
  }
  return comp;
}

}  // namespace umeb
