#include "scatter1d/amplitudes.hpp"

#include <algorithm>
#include <cmath>

#include "scatter1d/errors.hpp"
#include "scatter1d/quadrature.hpp"

namespace scatter1d {

namespace {
const Cx kI{0.0, 1.0};

SpectralFlags flags_from_residuals(SpectralFlags f, double eps) {
  f.spectral_singularity = f.inv_transmission_residual <= eps;
  f.cpa = f.cpa_residual <= eps;
  f.right_reflectionless = f.right_reflection_residual <= eps;
  f.left_reflectionless = f.left_reflection_residual <= eps;
  const bool unit_t = f.unit_transmission_residual <= eps;
  f.right_invisible = f.right_reflectionless && !f.left_reflectionless && unit_t;
  f.left_invisible = f.left_reflectionless && !f.right_reflectionless && unit_t;
  f.bidirectional_invisible =
      f.left_reflectionless && f.right_reflectionless && unit_t;
  return f;
}

}  // namespace

std::string route_name(Route r) {
  switch (r) {
    case Route::Evolution: return "evolution";
    case Route::Jost: return "jost";
    case Route::SForm: return "s";
    case Route::Auto: return "auto";
  }
  return "?";
}

ScatteringAmplitudes amplitudes_from_matrix(const Complex2x2& m, double k,
                                            Route route) {
  if (std::abs(m.det() - 1.0) > 1e-6)
    throw std::invalid_argument(
        "amplitudes_from_matrix: matrix determinant deviates from 1");
  if (std::abs(m.m22) <= 1e-12 * std::max(1.0, m.max_abs()))
    throw SpectralSingularityError(
        "amplitudes_from_matrix: M22 ~ 0, transmission pole (spectral "
        "singularity)");
  ScatteringAmplitudes amps;
  amps.k = k;
  amps.transmission = 1.0 / m.m22;
  amps.right_reflection = m.m12 / m.m22;
  amps.left_reflection = -m.m21 / m.m22;
  amps.route = route;
  return amps;
}

Complex2x2 matrix_from_amplitudes(const ScatteringAmplitudes& amps) {
  const Cx t = amps.transmission;
  if (std::abs(t) == 0.0)
    throw ZeroTransmission("matrix_from_amplitudes: T = 0");
  const Cx rl = amps.left_reflection;
  const Cx rr = amps.right_reflection;
  return {t - rl * rr / t, rr / t, -rl / t, 1.0 / t};
}

ScatteringAmplitudes amplitudes_from_jost(const JostSolution& jost,
                                          const Potential& p, double a,
                                          const IntegratorConfig& cfg) {
  const double k = jost.k();
  const Interval sup = jost.support();
  const double at = std::clamp(a, sup.lo, sup.hi);

  const Cx fm = jost.f_minus(at);
  const Cx fp = jost.f_plus(at);
  if (std::abs(fm) <= 1e-10 * (1.0 + std::abs(fp)))
    throw SpectralSingularityError(
        "amplitudes_from_jost: F- ~ 0, transmission pole (spectral "
        "singularity)");

  ScatteringAmplitudes amps;
  amps.k = k;
  amps.route = Route::Jost;
  amps.right_reflection = -std::exp(-2.0 * kI * k * at) * fp / fm;
  amps.transmission = -2.0 * kI * k * std::exp(-kI * k * at) / fm;
  if (at > sup.lo) {
    amps.left_reflection =
        2.0 * kI * k *
        quadrature_real(
            [&](double x) {
              const Cx f = jost.f_minus(x);
              return p(x, k) / (f * f);
            },
            sup.lo, at, cfg, p.breakpoints());
  }
  return amps;
}

ScatteringAmplitudes amplitudes_from_s(const SFunction& s,
                                       const IntegratorConfig& cfg) {
  const double k = s.k();
  const Interval sup = s.support();
  const Cx s_end = s.s_at(sup.hi);
  const Cx ds_end = s.ds_at(sup.hi);
  const Cx z_end = s.z_end();
  if (std::abs(ds_end) <= 1e-10 * (1.0 + std::abs(s_end)))
    throw SpectralSingularityError(
        "amplitudes_from_s: S'(z+) ~ 0, transmission pole (spectral "
        "singularity)");

  ScatteringAmplitudes amps;
  amps.k = k;
  amps.route = Route::SForm;
  amps.right_reflection = s_end / ds_end - z_end;
  amps.transmission = 1.0 / ds_end;
  if (sup.length() > 0.0) {
    // -S''/(S S'^2) dw pulled back to the arc parameter phi = k a; the ODE
    // supplies S'' = -v S / (4 k^2 z^2), so the integrand only needs S'.
    const Potential& p = s.potential();
    auto g = [&](double phi, Cx w) {
      const double x = phi / k;
      const Cx ds = s.ds_at(x);
      return p(x, k) / (4.0 * k * k * w * w * ds * ds);
    };
    // Force panel edges at the potential's own discontinuities too.
    Cx integral{0.0};
    double prev = sup.lo;
    for (double b : p.breakpoints()) {
      if (b > prev && b < sup.hi) {
        integral += quadrature_arc(g, ArcPath{k * prev, k * b}, cfg);
        prev = b;
      }
    }
    integral += quadrature_arc(g, ArcPath{k * prev, k * sup.hi}, cfg);
    amps.left_reflection = integral;
  }
  return amps;
}

SpectralFlags classify(const ScatteringAmplitudes& amps,
                       const ClassifyThresholds& thresholds) {
  const Cx t = amps.transmission;
  const Cx rl = amps.left_reflection;
  const Cx rr = amps.right_reflection;
  SpectralFlags f;
  f.inv_transmission_residual = std::abs(1.0 / t);
  f.cpa_residual = std::abs(t - rl * rr / t);  // |M11|
  f.right_reflection_residual = std::abs(rr);
  f.left_reflection_residual = std::abs(rl);
  f.unit_transmission_residual = std::abs(t - 1.0);
  return flags_from_residuals(f, thresholds.tolerance);
}

SpectralFlags classify_matrix(const Complex2x2& m,
                              const ClassifyThresholds& thresholds) {
  SpectralFlags f;
  f.inv_transmission_residual = std::abs(m.m22);  // 1/T = M22
  f.cpa_residual = std::abs(m.m11);
  f.right_reflection_residual = std::abs(m.m12) / std::abs(m.m22);
  f.left_reflection_residual = std::abs(m.m21) / std::abs(m.m22);
  f.unit_transmission_residual = std::abs(1.0 / m.m22 - 1.0);
  return flags_from_residuals(f, thresholds.tolerance);
}

ScatteringAmplitudes scatter(const Potential& p, double k, Route route,
                             const IntegratorConfig& cfg) {
  if (!(k > 0.0)) throw std::invalid_argument("scatter: k must be > 0");
  if (p.support().length() <= 0.0) {
    ScatteringAmplitudes amps;
    amps.k = k;
    amps.route = route;
    return amps;
  }

  switch (route) {
    case Route::Evolution:
      return amplitudes_from_matrix(
          evolve_transfer(p, k, cfg).final_matrix(), k, Route::Evolution);
    case Route::Jost: {
      const JostSolution jost = solve_jost(p, k, cfg);
      return amplitudes_from_jost(jost, p, p.support().hi, cfg);
    }
    case Route::SForm:
      return amplitudes_from_s(solve_s(p, k, cfg), cfg);
    case Route::Auto: {
      const JostSolution jost = solve_jost(p, k, cfg);
      ScatteringAmplitudes amps =
          amplitudes_from_jost(jost, p, p.support().hi, cfg);
      const ScatteringAmplitudes check = amplitudes_from_matrix(
          evolve_transfer(p, k, cfg).final_matrix(), k, Route::Evolution);
      amps.route = Route::Auto;
      amps.route_deviation = std::max(
          {std::abs(amps.left_reflection - check.left_reflection),
           std::abs(amps.right_reflection - check.right_reflection),
           std::abs(amps.transmission - check.transmission)});
      return amps;
    }
  }
  throw std::invalid_argument("scatter: unknown route");
}

}  // namespace scatter1d
