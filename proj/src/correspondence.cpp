#include "umeb/correspondence.hpp"

#include <cmath>

namespace umeb {

BipartiteState matrix_to_state(const Matrix& a) {
  BipartiteState s;
  s.dA = a.cols();
  s.dB = a.rows();
  s.amplitudes.resize(s.dA * s.dB);
  const double scale = 1.0 / std::sqrt(static_cast<double>(s.dA));
  for (Index k = 0; k < s.dA; ++k) {
    for (Index lp = 0; lp < s.dB; ++lp) {
      s.amplitudes(k * s.dB + lp) = a(lp, k) * scale;
    }
  }
  return s;
}

Matrix state_to_matrix(const BipartiteState& s) {
  if (s.amplitudes.size() != s.dA * s.dB) {
    throw DimensionError("state_to_matrix: amplitude length mismatch");
  }
  Matrix a(s.dB, s.dA);
  const double scale = std::sqrt(static_cast<double>(s.dA));
  for (Index k = 0; k < s.dA; ++k) {
    for (Index lp = 0; lp < s.dB; ++lp) {
      a(lp, k) = s.amplitudes(k * s.dB + lp) * scale;
    }
  }
  return a;
}

Complex state_inner(const BipartiteState& s1, const BipartiteState& s2) {
  if (s1.dA != s2.dA || s1.dB != s2.dB) {
    throw DimensionError("state_inner: dimension mismatch");
  }
  return s1.amplitudes.dot(s2.amplitudes);
}

}  // namespace umeb
