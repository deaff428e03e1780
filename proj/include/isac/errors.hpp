#pragma once

#include <stdexcept>
#include <string>

namespace isac {

// Fisher information cannot be inverted: the target is not illuminated or the
// Schur complement lost definiteness.
class SingularFim : public std::runtime_error {
 public:
  SingularFim(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Rate evaluation hit a negative interference-plus-noise denominator: the
// waveform violates the covariance dominance condition.
class InfeasibleWaveform : public std::runtime_error {
 public:
  InfeasibleWaveform(const std::string& what, double denominator)
      : std::runtime_error(what), denominator_(denominator) {}
  double denominator() const { return denominator_; }

 private:
  double denominator_;
};

// Rank-one extraction failed on a user with an active rate constraint.
class RecoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The design problem admits no waveform meeting the rate constraints under
// the power budget.
class InfeasibleDesign : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The conic solve stopped without an optimality certificate.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isac
