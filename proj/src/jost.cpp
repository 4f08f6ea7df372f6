#include "scatter1d/jost.hpp"

#include <cmath>
#include <utility>

#include "scatter1d/errors.hpp"

namespace scatter1d {

namespace {
const Cx kI{0.0, 1.0};
constexpr double kRiccatiEscape = 1e8;
}

JostSolution::JostSolution(Potential p, double k, OdeTrajectory ode)
    : potential_(std::move(p)), k_(k), ode_(std::move(ode)) {}

void JostSolution::eval(double x, Cx& psi, Cx& dpsi) const {
  const Interval sup = potential_.support();
  if (x <= sup.lo || ode_.dimension() == 0) {
    // Free incoming wave left of the support.
    const Cx w = std::exp(-kI * k_ * x);
    psi = w;
    dpsi = -kI * k_ * w;
    return;
  }
  Cx buf[2];
  ode_.eval(std::min(x, sup.hi), std::span<Cx>(buf, 2));
  psi = buf[0];
  dpsi = buf[1];
}

Cx JostSolution::psi(double x) const {
  Cx p, dp;
  eval(x, p, dp);
  return p;
}

Cx JostSolution::dpsi(double x) const {
  Cx p, dp;
  eval(x, p, dp);
  return dp;
}

Cx JostSolution::f_plus(double x) const {
  Cx p, dp;
  eval(x, p, dp);
  return dp + kI * k_ * p;
}

Cx JostSolution::f_minus(double x) const {
  Cx p, dp;
  eval(x, p, dp);
  return dp - kI * k_ * p;
}

JostSolution solve_jost(const Potential& p, double k,
                        const IntegratorConfig& cfg) {
  if (!(k > 0.0)) throw std::invalid_argument("solve_jost: k must be > 0");
  const Interval sup = p.support();
  if (sup.length() <= 0.0) return JostSolution(p, k, OdeTrajectory{});

  auto rhs = [&p, k](double x, std::span<const Cx> y, std::span<Cx> dy) {
    dy[0] = y[1];
    dy[1] = (p(x, k) - k * k) * y[0];
  };
  const Cx w0 = std::exp(-kI * k * sup.lo);
  OdeTrajectory ode = integrate_ode(rhs, sup.lo, sup.hi,
                                    {w0, -kI * k * w0}, cfg, p.breakpoints());
  return JostSolution(p, k, std::move(ode));
}

SFunction::SFunction(Potential p, double k, OdeTrajectory ode)
    : potential_(std::move(p)), k_(k), ode_(std::move(ode)) {}

Cx SFunction::z_at(double a) const { return std::exp(-2.0 * kI * k_ * a); }

Cx SFunction::s_at(double a) const {
  const Interval sup = potential_.support();
  if (a <= sup.lo || ode_.dimension() == 0) return z_at(std::max(a, sup.lo));
  Cx buf[2];
  ode_.eval(std::min(a, sup.hi), std::span<Cx>(buf, 2));
  return buf[0];
}

Cx SFunction::ds_at(double a) const {
  const Interval sup = potential_.support();
  if (a <= sup.lo || ode_.dimension() == 0) return Cx{1.0};
  Cx buf[2];
  ode_.eval(std::min(a, sup.hi), std::span<Cx>(buf, 2));
  return buf[1];
}

SFunction solve_s(const Potential& p, double k, const IntegratorConfig& cfg) {
  if (!(k > 0.0)) throw std::invalid_argument("solve_s: k must be > 0");
  const Interval sup = p.support();
  if (sup.length() <= 0.0) return SFunction(p, k, OdeTrajectory{});

  // State (S, P) with P = dS/dz; chain rule through z(a) = e^{-2ika}:
  //   dS/da = -2ik z P,   dP/da = (i v / 2k) S / z.
  auto rhs = [&p, k](double a, std::span<const Cx> y, std::span<Cx> dy) {
    const Cx z = std::exp(-2.0 * kI * k * a);
    dy[0] = -2.0 * kI * k * z * y[1];
    dy[1] = (kI * p(a, k) / (2.0 * k)) * y[0] / z;
  };
  const Cx z0 = std::exp(-2.0 * kI * k * sup.lo);
  OdeTrajectory ode =
      integrate_ode(rhs, sup.lo, sup.hi, {z0, Cx{1.0}}, cfg, p.breakpoints());
  return SFunction(p, k, std::move(ode));
}

RiccatiTrajectory::RiccatiTrajectory(Potential p, double k, OdeTrajectory ode)
    : potential_(std::move(p)), k_(k), ode_(std::move(ode)) {}

Cx RiccatiTrajectory::reflection_at(double a) const {
  const Interval sup = potential_.support();
  if (a <= sup.lo || ode_.dimension() == 0) return Cx{0.0};
  Cx buf[1];
  ode_.eval(std::min(a, sup.hi), std::span<Cx>(buf, 1));
  return buf[0];
}

Cx RiccatiTrajectory::final_reflection() const {
  return reflection_at(potential_.support().hi);
}

RiccatiTrajectory solve_riccati(const Potential& p, double k,
                                const IntegratorConfig& cfg) {
  if (!(k > 0.0)) throw std::invalid_argument("solve_riccati: k must be > 0");
  const Interval sup = p.support();
  if (sup.length() <= 0.0) return RiccatiTrajectory(p, k, OdeTrajectory{});

  // dR/da = -(i v / 2k) e^{2ika} (R + e^{-2ika})^2, R(a-) = 0.
  auto rhs = [&p, k](double a, std::span<const Cx> y, std::span<Cx> dy) {
    if (std::abs(y[0]) > kRiccatiEscape)
      throw RiccatiBlowUp("solve_riccati: reflection amplitude escaping "
                          "(transmission pole nearby)");
    const Cx z = std::exp(-2.0 * kI * k * a);
    const Cx sum = y[0] + z;
    dy[0] = -(kI * p(a, k) / (2.0 * k)) * sum * sum / z;
  };
  OdeTrajectory ode =
      integrate_ode(rhs, sup.lo, sup.hi, {Cx{0.0}}, cfg, p.breakpoints());
  return RiccatiTrajectory(p, k, std::move(ode));
}

}  // namespace scatter1d
