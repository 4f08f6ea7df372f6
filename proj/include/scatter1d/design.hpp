#ifndef SCATTER1D_DESIGN_HPP
#define SCATTER1D_DESIGN_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scatter1d/amplitudes.hpp"
#include "scatter1d/potential.hpp"

namespace scatter1d {

enum class DesignGoal { Lasing, Cpa, RightInvisible };

std::string goal_name(DesignGoal g);

// Target of an inverse design on [0, L] at wavenumber k0.
struct DesignSpec {
  double k0 = 1.0;
  double length = 1.0;
  DesignGoal goal = DesignGoal::RightInvisible;
  Cx gamma = 1e-6;  // profile strength (RightInvisible only)

  double k0L() const { return k0 * length; }
  Cx z_end() const;  // e^{-2 i k0 L}
};

// S(z) = c0 + c1 z + c2 z^2 + c3 z^3.
struct SPolynomial {
  std::array<Cx, 4> c{};

  Cx value(Cx z) const;
  Cx deriv(Cx z) const;
  Cx second(Cx z) const;
};

// Uniformly sampled n^2(x) on [0, L]; n^2 = 1 outside.
struct IndexProfileRecord {
  double k0 = 0.0;
  double length = 0.0;
  std::vector<double> x;
  std::vector<Cx> n_squared;
};

struct DesignResult {
  DesignSpec spec;
  // Generating polynomial; for the CPA goal this is the underlying lasing
  // polynomial (the CPA profile is its pointwise conjugate).
  SPolynomial s;
  std::function<Cx(double)> n_squared;  // = 1 outside [0, L]
  Potential potential;                  // v(x, k) = k^2 (1 - n^2(x))

  // Closed-form predictions at k0 (invisibility designs).
  std::optional<Cx> predicted_transmission;
  std::optional<Cx> predicted_right_reflection;
};

// Threshold laser: S'(z+) = 0 makes 1/T vanish at k0. Requires k0 L not a
// multiple of pi/2 (the index profile is singular there); violations throw
// SingularProfile.
DesignResult design_lasing(const DesignSpec& spec);

// Anti-laser: pointwise conjugate of the lasing profile; M11(k0) = 0.
DesignResult design_cpa(const DesignSpec& spec);

// Right-reflectionless profile: z+ S'(z+) = S(z+) makes R^r vanish at k0
// while R^l stays generically nonzero.
DesignResult design_right_invisible(const DesignSpec& spec);

DesignResult make_design(const DesignSpec& spec);

// T = 1 / (1 + gamma (1 - e^{-2 i k0 L})^3), periodic in k0 L with period pi.
// Requires goal == RightInvisible.
Cx predicted_transmission(const DesignSpec& spec);

// Design-side R^l at k0 for an invisibility design, via the arc integral of
// -S''/(S S'^2). Works at any k0 L (fractional windings included).
Cx predicted_left_reflection(const DesignSpec& spec,
                             const IntegratorConfig& cfg = {});

// R^l for the whole-winding case k0 L = m pi (closed contour traversed m
// times); linear in m. Uses the gamma of `spec`; requires RightInvisible.
Cx left_reflection_contour(const DesignSpec& spec, int windings,
                           const IntegratorConfig& cfg = {});

IndexProfileRecord sample_index_profile(const DesignResult& result,
                                        int n_points);

}  // namespace scatter1d

#endif  // SCATTER1D_DESIGN_HPP
