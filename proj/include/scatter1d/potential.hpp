#ifndef SCATTER1D_POTENTIAL_HPP
#define SCATTER1D_POTENTIAL_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "scatter1d/complex2x2.hpp"

namespace scatter1d {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

// Finite-range scattering potential v(x), possibly complex-valued and
// wavenumber-dependent. Evaluates to exactly zero outside its support.
// Instances are immutable; the transform methods return new views sharing
// the underlying profile.
class Potential {
 public:
  enum class Kind { Zero, Barrier, ModulatedExponential, IndexProfile, Sampled, Closure, Derived };

  // Default-constructed potentials are the zero potential.
  Potential();

  // v = 0 everywhere (degenerate support).
  static Potential zero();

  // v(x) = height on [0, length].
  static Potential barrier(Cx height, double length);

  // v(x) = height * e^{-4 i modulation_k x} on [0, length].
  static Potential modulated_exponential(Cx height, double modulation_k,
                                         double length);

  // Optical profile: v(x, k) = k^2 (1 - n_squared(x)) on the support.
  // reference_k records the wavenumber the profile was designed for.
  static Potential from_index(std::function<Cx(double)> n_squared,
                              double reference_k, Interval support);

  // Values on a grid, evaluated in between by cubic-spline interpolation.
  static Potential sampled(std::vector<double> x, std::vector<Cx> v);

  // Arbitrary evaluator (x, k) -> v on the given support.
  static Potential closure(std::function<Cx(double, double)> f,
                           Interval support,
                           std::vector<double> interior_breakpoints = {});

  // v(x) at wavenumber k; zero outside the support.
  Cx operator()(double x, double k) const;

  Interval support() const;
  Kind kind() const;

  // Interior discontinuity locations; integration spans split here.
  const std::vector<double>& breakpoints() const;

  // v(x) * theta(a - x): equal to v for x <= a, zero above.
  Potential truncated(double a) const;

  // v - truncated(a): zero for x <= a, equal to v above.
  Potential upper_remainder(double a) const;

  // v(-x).
  Potential parity_reflected() const;

  // Construction parameters, where the potential is a primitive kind.
  struct BarrierParams {
    Cx height;
    double length;
  };
  struct ModExpParams {
    Cx height;
    double modulation_k;
    double length;
  };
  struct SampledParams {
    std::vector<double> x;
    std::vector<Cx> v;
  };
  const BarrierParams* barrier_params() const;
  const ModExpParams* modexp_params() const;
  const SampledParams* sampled_params() const;

 private:
  struct Impl;
  explicit Potential(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace scatter1d

#endif  // SCATTER1D_POTENTIAL_HPP
