#ifndef UMEB_MATRIX_CORE_HPP
#define UMEB_MATRIX_CORE_HPP

#include <vector>

#include "umeb/types.hpp"

namespace umeb {

/// Hilbert-Schmidt inner product Tr(a^dag b). Conjugate-linear in the first
/// argument, so hs_inner(a, b) == conj(hs_inner(b, a)).
template <typename DerivedA, typename DerivedB>
Complex hs_inner(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  return a.conjugate().cwiseProduct(b).sum();
}

template <typename Derived>
double hs_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();  // Frobenius norm == sqrt(Tr(a^dag a))
}

/// Kronecker product a (x) b with block layout
/// (a kron b)(i1*rb + i2, j1*cb + j2) = a(i1, j1) * b(i2, j2).
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  const Index rb = b.rows(), cb = b.cols();
  Matrix out(a.rows() * rb, a.cols() * cb);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

/// Singular values of a, non-increasing; min(rows, cols) entries.
RealVector singular_values(const Matrix& a);

/// True iff every singular value of a lies in [1 - eps_sv, 1 + eps_sv].
/// Equivalent to a being unitary when square, an isometry-scale embedding
/// otherwise; the matrix side of a maximally entangled state.
bool is_sv1(const Matrix& a, const Tolerance& tol = {});

/// Numerical rank: number of singular values above eps_rank * sigma_max.
/// The zero matrix (sigma_max <= eps_rank absolute) has rank 0.
int rank_of(const Matrix& a, const Tolerance& tol = {});

/// Orthonormal basis (Hilbert-Schmidt) of the orthogonal complement of a
/// span inside the full matrix space of the members' shape.
struct ComplementSpace {
  Index rows = 0;
  Index cols = 0;
  std::vector<Matrix> basis;  // each with Tr(E^dag E) = 1

  Index dim() const { return static_cast<Index>(basis.size()); }
};

/// Computes the orthogonal complement of span(members) in M_{rows x cols}
/// by Gram-Schmidt over the elementary-matrix basis against the (possibly
/// unnormalized) members, followed by a re-orthonormalization pass.
/// Members must share one shape and be linearly independent; dependence is
/// detected through the smallest Gram eigenvalue and raises DegeneracyError.
ComplementSpace orthonormal_complement(const std::vector<Matrix>& members,
                                       const Tolerance& tol = {});

}  // namespace umeb

#endif  // UMEB_MATRIX_CORE_HPP
