#include "umeb/generators.hpp"

#include <cmath>
#include <numbers>

namespace umeb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Phase exp(2 pi i (n*a mod modulus) / modulus) from the exact reduced
// angle; avoids drift from repeated multiplication.
Complex root_of_unity(long n, long a, long modulus) {
  const long e = (n * a) % modulus;
  return std::polar(1.0, kTwoPi * static_cast<double>(e) /
                             static_cast<double>(modulus));
}

}  // namespace

Matrix clock_shift(int d, int n, int m) {
  if (d <= 0) throw ArgumentError("clock_shift: d must be positive");
  if (n < 0 || n >= d || m < 0 || m >= d) {
    throw ArgumentError("clock_shift: indices (n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ") out of range [0," +
                        std::to_string(d) + ")");
  }
  Matrix u = Matrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    u((a + m) % d, a) = root_of_unity(n, a, d);
  }
  return u;
}

Matrix rect_clock_shift(int p, int q, int k, int l) {
  if (p <= 0 || q <= 0) {
    throw ArgumentError("rect_clock_shift: dimensions must be positive");
  }
  if (p > q) {
    throw ArgumentError("rect_clock_shift: requires p <= q, got p=" +
                        std::to_string(p) + ", q=" + std::to_string(q));
  }
  if (k < 0 || k >= p || l < 0 || l >= q) {
    throw ArgumentError("rect_clock_shift: indices (k=" + std::to_string(k) +
                        ", l=" + std::to_string(l) + ") out of range");
  }
  Matrix v = Matrix::Zero(q, p);
  for (int a = 0; a < p; ++a) {
    v((a + l) % q, a) = root_of_unity(k, a, p);
  }
  return v;
}

}  // namespace umeb
