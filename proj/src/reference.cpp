#include "scatter1d/reference.hpp"

#include <cmath>

#include "scatter1d/errors.hpp"

namespace scatter1d {

namespace {
const Cx kI{0.0, 1.0};

// sin(w)/w, stable at w ~ 0.
Cx sinc(Cx w) {
  if (std::abs(w) < 1e-4) {
    const Cx w2 = w * w;
    return 1.0 - w2 / 6.0 * (1.0 - w2 / 20.0);
  }
  return std::sin(w) / w;
}
}  // namespace

Cx BarrierClosedForm::index_contrast() const {
  return std::sqrt(Cx{1.0} - height / (k * k));
}

Complex2x2 BarrierClosedForm::transfer_at(double alpha) const {
  if (alpha <= 0.0) return Complex2x2::identity();
  const double a = std::min(alpha, k * length);
  const Cx n = index_contrast();
  const Cx n2 = n * n;
  const Cx cosv = std::cos(n * a);
  // sin(n a)/n written through sinc keeps the n -> 0 limit finite.
  const Cx sin_over_n = a * sinc(n * a);
  const Cx phase = std::exp(-kI * a);

  Complex2x2 m;
  m.m11 = (cosv + kI * (n2 + 1.0) * sin_over_n / 2.0) * phase;
  m.m12 = kI * (n2 - 1.0) * sin_over_n / 2.0 * phase;
  m.m21 = -kI * (n2 - 1.0) * sin_over_n / 2.0 / phase;
  m.m22 = (cosv - kI * (n2 + 1.0) * sin_over_n / 2.0) / phase;
  return m;
}

ExpPotentialClosedForm::Amplitudes ExpPotentialClosedForm::amplitudes() const {
  const Cx amp = std::sqrt(height) / (2.0 * k0);
  const Cx z_end = std::exp(-2.0 * kI * k0 * length);
  const Cx arg = amp * (1.0 - z_end);
  const Cx cosb = std::cos(arg);
  const Cx sinb = std::sin(arg);
  const Cx denom = cosb + amp * sinb;
  if (std::abs(denom) < 1e-12 * (1.0 + std::abs(amp)))
    throw PoleEncountered("exp potential closed form: transmission pole");

  Amplitudes out;
  out.transmission = 1.0 / denom;
  out.left_reflection = -amp * sinb / denom;
  // sin(arg)/amp = sinc(arg) * (1 - z_end) stays finite as height -> 0.
  out.right_reflection =
      (cosb - sinc(arg) * (1.0 - z_end)) / denom - z_end;
  return out;
}

double barrier_hamiltonian_residual(const BarrierClosedForm& p, double alpha,
                                    double h) {
  const Complex2x2 m_plus = p.transfer_at(alpha + h);
  const Complex2x2 m_minus = p.transfer_at(alpha - h);
  const Complex2x2 m_inv = p.transfer_at(alpha).inverse();
  const Complex2x2 deriv = (Cx{1.0 / (2.0 * h)}) * (m_plus - m_minus);

  const Cx c = p.height / (2.0 * p.k * p.k);
  const Cx phase = std::exp(-2.0 * kI * alpha);
  const Complex2x2 ham{c, c * phase, -c / phase, -c};

  return max_abs_diff(deriv * m_inv, (Cx{0.0, -1.0}) * ham);
}

}  // namespace scatter1d
