#include "scatter1d/evolution.hpp"

#include <cmath>
#include <utility>

#include "scatter1d/errors.hpp"

namespace scatter1d {

namespace {
const Cx kI{0.0, 1.0};
}

Complex2x2 MatrixHamiltonian::operator()(double tau) const {
  const Cx v = potential(tau / k, k);
  if (v == Cx{0.0}) return Complex2x2::zero();
  const Cx c = v / (2.0 * k * k);
  const Cx phase = std::exp(-2.0 * kI * tau);
  return {c, c * phase, -c / phase, -c};
}

TransferTrajectory::TransferTrajectory(double k, double alpha_begin,
                                       double alpha_end, OdeTrajectory ode)
    : k_(k), alpha_begin_(alpha_begin), alpha_end_(alpha_end),
      ode_(std::move(ode)) {}

Complex2x2 TransferTrajectory::at(double alpha) const {
  if (alpha <= alpha_begin_ || ode_.dimension() == 0)
    return Complex2x2::identity();
  std::vector<Cx> y =
      alpha >= alpha_end_ ? ode_.final_state() : ode_.eval(alpha);
  return {y[0], y[1], y[2], y[3]};
}

Complex2x2 TransferTrajectory::final_matrix() const { return at(alpha_end_); }

double TransferTrajectory::max_det_defect() const {
  if (ode_.dimension() == 0) return 0.0;
  double worst = 0.0;
  for (double alpha : ode_.step_times())
    worst = std::max(worst, std::abs(at(alpha).det() - 1.0));
  return worst;
}

TransferTrajectory evolve_transfer(const Potential& p, double k,
                                   const IntegratorConfig& cfg) {
  if (!(k > 0.0)) throw std::invalid_argument("evolve_transfer: k must be > 0");
  const Interval sup = p.support();
  const double a0 = k * sup.lo, a1 = k * sup.hi;
  if (a1 <= a0) {
    return TransferTrajectory(k, a0, a1, OdeTrajectory{});
  }

  const MatrixHamiltonian ham{p, k};
  auto rhs = [&ham](double alpha, std::span<const Cx> y, std::span<Cx> dy) {
    const Complex2x2 h = ham(alpha);
    // dM/dalpha = -i H M, unpacked row-major (m11, m12, m21, m22).
    dy[0] = -kI * (h.m11 * y[0] + h.m12 * y[2]);
    dy[1] = -kI * (h.m11 * y[1] + h.m12 * y[3]);
    dy[2] = -kI * (h.m21 * y[0] + h.m22 * y[2]);
    dy[3] = -kI * (h.m21 * y[1] + h.m22 * y[3]);
  };

  std::vector<double> breaks;
  for (double b : p.breakpoints()) breaks.push_back(k * b);

  OdeTrajectory ode = integrate_ode(rhs, a0, a1,
                                    {Cx{1.0}, Cx{0.0}, Cx{0.0}, Cx{1.0}}, cfg,
                                    breaks);
  TransferTrajectory traj(k, a0, a1, std::move(ode));
  if (traj.max_det_defect() > 1e-6)
    throw DeterminantDrift("evolve_transfer: |det M - 1| exceeded 1e-6");
  return traj;
}

double composition_defect(const Potential& p, double k, double split_a,
                          const IntegratorConfig& cfg) {
  const Complex2x2 m_lower =
      evolve_transfer(p.truncated(split_a), k, cfg).final_matrix();
  const Complex2x2 m_upper =
      evolve_transfer(p.upper_remainder(split_a), k, cfg).final_matrix();
  const Complex2x2 m_full = evolve_transfer(p, k, cfg).final_matrix();
  return max_abs_diff(m_upper * m_lower, m_full);
}

}  // namespace scatter1d
