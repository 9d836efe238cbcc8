#ifndef UMEB_CORRESPONDENCE_HPP
#define UMEB_CORRESPONDENCE_HPP

#include "umeb/types.hpp"

namespace umeb {

/// Pure-state coefficient vector in C^{dA} (x) C^{dB}, amplitudes indexed
/// by (k, l') and flattened as k * dB + l'.
struct BipartiteState {
  Index dA = 0;
  Index dB = 0;
  Vector amplitudes;

  Complex amp(Index k, Index lp) const { return amplitudes(k * dB + lp); }
};

/// Matrix/state correspondence: a dB x dA matrix A maps to the state with
/// amplitudes amp(k, l') = A(l', k) / sqrt(dA). SV1 matrices map to
/// maximally entangled unit vectors, and the matrix rank equals the state's
/// Schmidt rank.
BipartiteState matrix_to_state(const Matrix& a);

/// Exact inverse of matrix_to_state.
Matrix state_to_matrix(const BipartiteState& s);

/// <s1|s2>; equals hs_inner(A1, A2) / dA for corresponding matrices.
Complex state_inner(const BipartiteState& s1, const BipartiteState& s2);

}  // namespace umeb

#endif  // UMEB_CORRESPONDENCE_HPP
