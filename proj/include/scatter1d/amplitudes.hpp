#ifndef SCATTER1D_AMPLITUDES_HPP
#define SCATTER1D_AMPLITUDES_HPP

#include <string>

#include "scatter1d/complex2x2.hpp"
#include "scatter1d/evolution.hpp"
#include "scatter1d/jost.hpp"
#include "scatter1d/potential.hpp"

namespace scatter1d {

enum class Route { Evolution, Jost, SForm, Auto };

std::string route_name(Route r);

// Reflection/transmission triple at one real wavenumber. Connected to the
// transfer matrix by
//   M11 = T - R^l R^r / T,  M12 = R^r / T,  M21 = -R^l / T,  M22 = 1 / T.
struct ScatteringAmplitudes {
  double k = 0.0;
  Cx left_reflection{0.0};
  Cx right_reflection{0.0};
  Cx transmission{1.0};
  Route route = Route::Jost;
  // Max amplitude disagreement against the cross-check route (route == Auto).
  double route_deviation = 0.0;
};

struct ClassifyThresholds {
  double tolerance = 1e-6;
};

// Spectral classification at one wavenumber, with the residual magnitude
// behind every flag.
struct SpectralFlags {
  bool spectral_singularity = false;  // 1/T = 0 (laser threshold)
  bool cpa = false;                   // M11 = 0 (anti-laser)
  bool right_reflectionless = false;
  bool left_reflectionless = false;
  bool right_invisible = false;  // R^r = 0, R^l != 0, T = 1
  bool left_invisible = false;
  bool bidirectional_invisible = false;  // both reflections vanish, T = 1

  double inv_transmission_residual = 0.0;   // |1/T|
  double cpa_residual = 0.0;                // |M11|
  double right_reflection_residual = 0.0;   // |R^r|
  double left_reflection_residual = 0.0;    // |R^l|
  double unit_transmission_residual = 0.0;  // |T - 1|
};

// Reads (R^l, R^r, T) off a unit-determinant transfer matrix. Throws
// SpectralSingularityError when M22 is at the numerical floor and
// std::invalid_argument when det M deviates from 1 beyond 1e-6.
ScatteringAmplitudes amplitudes_from_matrix(const Complex2x2& m, double k,
                                            Route route = Route::Evolution);

// Inverse of amplitudes_from_matrix; throws ZeroTransmission.
Complex2x2 matrix_from_amplitudes(const ScatteringAmplitudes& amps);

// Amplitudes of the truncated potential v * theta(a - x) from one Jost
// solution of the full potential:
//   R^r(a) = -e^{-2ika} F+(a) / F-(a),   T(a) = -2ik e^{-ika} / F-(a),
//   R^l(a) = 2ik * integral_{a-}^{a} v(x) / F-(x)^2 dx.
// The full-range amplitudes are a = a+.
ScatteringAmplitudes amplitudes_from_jost(const JostSolution& jost,
                                          const Potential& p, double a,
                                          const IntegratorConfig& cfg = {});

// Amplitudes from the S-function route:
//   R^r = S(z+)/S'(z+) - z+,  T = 1/S'(z+),
//   R^l = -integral S''/(S S'^2) dw along the arc.
ScatteringAmplitudes amplitudes_from_s(const SFunction& s,
                                       const IntegratorConfig& cfg = {});

SpectralFlags classify(const ScatteringAmplitudes& amps,
                       const ClassifyThresholds& thresholds = {});

// Classification straight off the transfer matrix. Stays well-defined at a
// spectral singularity (M22 = 0), where the amplitude triple does not exist.
SpectralFlags classify_matrix(const Complex2x2& m,
                              const ClassifyThresholds& thresholds = {});

// Facade over the three routes. Route::Auto solves the Jost problem and
// cross-checks against the evolution route, recording the max deviation.
ScatteringAmplitudes scatter(const Potential& p, double k,
                             Route route = Route::Auto,
                             const IntegratorConfig& cfg = {});

}  // namespace scatter1d

#endif  // SCATTER1D_AMPLITUDES_HPP
