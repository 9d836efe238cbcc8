#ifndef UMEB_TYPES_HPP
#define UMEB_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace umeb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical tolerances shared by all verification routines.
/// eps_orth bounds inner-product residuals, eps_sv singular-value
/// deviations from 1, eps_rank is the relative rank cutoff against
/// the largest singular value.
struct Tolerance {
  double eps_orth = 1e-9;
  double eps_sv = 1e-9;
  double eps_rank = 1e-8;

  bool valid() const {
    return eps_orth > 0 && eps_orth < 1 && eps_sv > 0 && eps_sv < 1 &&
           eps_rank > 0 && eps_rank < 1;
  }
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameters: out-of-range indices, p > q, wrong seed kind.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible shape.
class DimensionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Linearly dependent input where independence is required. Carries the
/// offending (smallest) Gram-matrix eigenvalue.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, double gram_eigenvalue)
      : Error(what), gram_eigenvalue_(gram_eigenvalue) {}
  double gram_eigenvalue() const { return gram_eigenvalue_; }

 private:
  double gram_eigenvalue_;
};

/// A structural invariant failed on loaded or constructed data. Carries the
/// name of the failed check (shape / sv1 / orthogonality / completeness).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& check, const std::string& what)
      : Error(check + ": " + what), check_(check) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace umeb

#endif  // UMEB_TYPES_HPP
