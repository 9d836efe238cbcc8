#ifndef UMEB_GENERATORS_HPP
#define UMEB_GENERATORS_HPP

#include "umeb/types.hpp"

namespace umeb {

/// d x d clock/shift operator
///   U_{nm} = sum_a exp(2 pi i n a / d) |a + m mod d><a|,
/// unitary for all 0 <= n, m < d. The d^2 of them form a unitary
/// Hilbert-Schmidt basis of M_{d x d} with Tr(U^dag U') = d delta.
Matrix clock_shift(int d, int n, int m);

/// q x p rectangular clock/shift isometry (p <= q)
///   V_{kl} = sum_{a<p} exp(2 pi i k a / p) |a + l mod q><a|,
/// with all p singular values equal to 1; the pq of them are pairwise
/// Hilbert-Schmidt orthogonal with Tr(V^dag V') = p delta.
Matrix rect_clock_shift(int p, int q, int k, int l);

}  // namespace umeb

#endif  // UMEB_GENERATORS_HPP
