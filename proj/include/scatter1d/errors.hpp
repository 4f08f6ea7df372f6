#ifndef SCATTER1D_ERRORS_HPP
#define SCATTER1D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scatter1d {

// Base class for failures inside the numerical kernels.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive stepper hit the step budget (stiffness, vanishing step size).
class StepLimitExceeded : public SolverError {
 public:
  using SolverError::SolverError;
};

// The right-hand side produced NaN/Inf, or the state left the finite range.
class NonFiniteState : public SolverError {
 public:
  using SolverError::SolverError;
};

// Quadrature integrand evaluated to NaN/Inf.
class NonFiniteIntegrand : public SolverError {
 public:
  using SolverError::SolverError;
};

// |det M - 1| exceeded the trust threshold along an evolution trajectory.
class DeterminantDrift : public SolverError {
 public:
  using SolverError::SolverError;
};

// Riccati solution escaped towards a pole of the reflection amplitude.
class RiccatiBlowUp : public SolverError {
 public:
  using SolverError::SolverError;
};

// Transmission amplitude has a pole at the requested wavenumber (M22 ~ 0).
class SpectralSingularityError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Amplitude triple with T = 0 cannot be mapped back to a transfer matrix.
class ZeroTransmission : public SolverError {
 public:
  using SolverError::SolverError;
};

// Closed-form amplitude formula evaluated at one of its poles.
class PoleEncountered : public SolverError {
 public:
  using SolverError::SolverError;
};

// Designed index profile has a (near-)singular denominator on [0, L].
class SingularProfile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid run configuration (CLI / file input).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scatter1d

#endif  // SCATTER1D_ERRORS_HPP
