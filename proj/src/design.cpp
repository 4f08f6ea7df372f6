#include "scatter1d/design.hpp"

#include <cmath>
#include <limits>

#include "scatter1d/errors.hpp"
#include "scatter1d/quadrature.hpp"

namespace scatter1d {

namespace {

const Cx kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

// Smallest |S at the profile grid|: the n^2 denominator must stay away from
// zero across [0, L].
void check_profile_regular(const SPolynomial& s, double k0, double length) {
  double worst = std::numeric_limits<double>::max();
  const int n = 10000;
  for (int i = 0; i <= n; ++i) {
    const double x = length * double(i) / double(n);
    const Cx z = std::exp(-2.0 * kI * k0 * x);
    worst = std::min(worst, std::abs(s.value(z)));
  }
  if (worst < 1e-6)
    throw SingularProfile(
        "designed index profile has a (near-)singular denominator on [0, L]");
}

std::function<Cx(double)> index_from_s(SPolynomial s, double k0,
                                       double length) {
  // n^2 = 1 - v/k0^2 with v = -4 k0^2 z^2 S''(z)/S(z), z = e^{-2 i k0 x}.
  return [s, k0, length](double x) {
    if (x < 0.0 || x > length) return Cx{1.0};
    const Cx z = std::exp(-2.0 * kI * k0 * x);
    return Cx{1.0} + 4.0 * z * z * s.second(z) / s.value(z);
  };
}

Potential potential_from_profile(const std::function<Cx(double)>& n2,
                                 double k0, double length) {
  return Potential::from_index(n2, k0, Interval{0.0, length});
}

}  // namespace

std::string goal_name(DesignGoal g) {
  switch (g) {
    case DesignGoal::Lasing: return "lasing";
    case DesignGoal::Cpa: return "cpa";
    case DesignGoal::RightInvisible: return "uinv";
  }
  return "?";
}

Cx DesignSpec::z_end() const { return std::exp(-2.0 * kI * k0L()); }

Cx SPolynomial::value(Cx z) const {
  return c[0] + z * (c[1] + z * (c[2] + z * c[3]));
}
Cx SPolynomial::deriv(Cx z) const {
  return c[1] + z * (2.0 * c[2] + z * 3.0 * c[3]);
}
Cx SPolynomial::second(Cx z) const { return 2.0 * c[2] + 6.0 * c[3] * z; }

DesignResult design_lasing(const DesignSpec& spec) {
  if (!(spec.k0 > 0.0) || !(spec.length > 0.0))
    throw std::invalid_argument("design_lasing: k0 and L must be > 0");
  const double ratio = spec.k0L() / (kPi / 2.0);
  if (std::abs(ratio - std::round(ratio)) <= 1e-6 * std::max(1.0, ratio))
    throw SingularProfile(
        "design_lasing: k0 L is a multiple of pi/2, profile singular");

  const Cx z_end = spec.z_end();
  // S(z) = (z^2 - 2 z+ z + 1) / (2 (1 - z+)); S'(z+) = 0, S(1) = S'(1) = 1.
  const Cx scale = 1.0 / (2.0 * (1.0 - z_end));
  DesignResult result;
  result.spec = spec;
  result.s.c = {scale, -2.0 * z_end * scale, scale, Cx{0.0}};
  check_profile_regular(result.s, spec.k0, spec.length);
  result.n_squared = index_from_s(result.s, spec.k0, spec.length);
  result.potential =
      potential_from_profile(result.n_squared, spec.k0, spec.length);
  return result;
}

DesignResult design_cpa(const DesignSpec& spec) {
  DesignSpec base = spec;
  base.goal = DesignGoal::Lasing;
  DesignResult lasing = design_lasing(base);

  DesignResult result;
  result.spec = spec;
  result.s = lasing.s;
  result.n_squared = [inner = lasing.n_squared](double x) {
    return std::conj(inner(x));
  };
  result.potential =
      potential_from_profile(result.n_squared, spec.k0, spec.length);
  return result;
}

DesignResult design_right_invisible(const DesignSpec& spec) {
  if (!(spec.k0 > 0.0) || !(spec.length > 0.0))
    throw std::invalid_argument("design_right_invisible: k0, L must be > 0");
  const Cx z_end = spec.z_end();
  const Cx cubic_coef = z_end + 1.0;                       // g1
  const Cx quad_coef = (z_end - 1.0) * (2.0 * z_end + 1.0);  // g2
  const Cx g = spec.gamma;

  // S(z) = gamma [g1 (z-1)^3 - g2 (z-1)^2] + z, expanded in powers of z.
  DesignResult result;
  result.spec = spec;
  result.s.c = {g * (-cubic_coef - quad_coef),
                g * (3.0 * cubic_coef + 2.0 * quad_coef) + 1.0,
                g * (-3.0 * cubic_coef - quad_coef), g * cubic_coef};
  check_profile_regular(result.s, spec.k0, spec.length);
  result.n_squared = index_from_s(result.s, spec.k0, spec.length);
  result.potential =
      potential_from_profile(result.n_squared, spec.k0, spec.length);
  result.predicted_transmission = predicted_transmission(spec);
  result.predicted_right_reflection = Cx{0.0};
  return result;
}

DesignResult make_design(const DesignSpec& spec) {
  switch (spec.goal) {
    case DesignGoal::Lasing: return design_lasing(spec);
    case DesignGoal::Cpa: return design_cpa(spec);
    case DesignGoal::RightInvisible: return design_right_invisible(spec);
  }
  throw std::invalid_argument("make_design: unknown goal");
}

Cx predicted_transmission(const DesignSpec& spec) {
  if (spec.goal != DesignGoal::RightInvisible)
    throw std::invalid_argument(
        "predicted_transmission: defined for the invisibility design");
  const Cx w = 1.0 - spec.z_end();
  return 1.0 / (1.0 + spec.gamma * w * w * w);
}

Cx predicted_left_reflection(const DesignSpec& spec,
                             const IntegratorConfig& cfg) {
  if (spec.goal != DesignGoal::RightInvisible)
    throw std::invalid_argument(
        "predicted_left_reflection: defined for the invisibility design");
  const SPolynomial s = design_right_invisible(spec).s;
  auto g = [&s](Cx w) {
    return -s.second(w) / (s.value(w) * s.deriv(w) * s.deriv(w));
  };
  return quadrature_arc(g, ArcPath{0.0, spec.k0L()}, cfg);
}

Cx left_reflection_contour(const DesignSpec& spec, int windings,
                           const IntegratorConfig& cfg) {
  if (spec.goal != DesignGoal::RightInvisible)
    throw std::invalid_argument(
        "left_reflection_contour: defined for the invisibility design");
  if (windings < 1)
    throw std::invalid_argument("left_reflection_contour: windings >= 1");
  // Whole-winding design: z+ = 1 exactly, so S = 2 gamma (z-1)^3 + z.
  const Cx two_gamma = 2.0 * spec.gamma;
  SPolynomial s;
  s.c = {-two_gamma, 3.0 * two_gamma + 1.0, -3.0 * two_gamma, two_gamma};
  auto g = [&s](Cx w) {
    return -s.second(w) / (s.value(w) * s.deriv(w) * s.deriv(w));
  };
  return quadrature_arc(g, ArcPath{0.0, windings * kPi}, cfg);
}

IndexProfileRecord sample_index_profile(const DesignResult& result,
                                        int n_points) {
  if (n_points < 2)
    throw std::invalid_argument("sample_index_profile: need >= 2 points");
  IndexProfileRecord rec;
  rec.k0 = result.spec.k0;
  rec.length = result.spec.length;
  rec.x.reserve(n_points);
  rec.n_squared.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double x = result.spec.length * double(i) / double(n_points - 1);
    rec.x.push_back(x);
    rec.n_squared.push_back(result.n_squared(x));
  }
  return rec;
}

}  // namespace scatter1d
