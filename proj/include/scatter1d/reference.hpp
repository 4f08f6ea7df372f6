#ifndef SCATTER1D_REFERENCE_HPP
#define SCATTER1D_REFERENCE_HPP

#include "scatter1d/complex2x2.hpp"

namespace scatter1d {

// Closed-form transfer matrix of the rectangular barrier
// v(x) = height * theta(x) theta(length - x) at wavenumber k. Anchors the
// numerical routes in tests.
struct BarrierClosedForm {
  Cx height;
  double k = 1.0;
  double length = 1.0;

  // sqrt(1 - height / k^2); all entries are even in it, so the branch is
  // irrelevant.
  Cx index_contrast() const;

  // M(alpha): identity for alpha <= 0, frozen at M(k length) beyond.
  Complex2x2 transfer_at(double alpha) const;
  Complex2x2 full_transfer() const { return transfer_at(k * length); }
};

// Closed-form amplitudes of v(x) = height * e^{-4 i k0 x} on [0, length],
// valid at the design wavenumber k = k0 only.
struct ExpPotentialClosedForm {
  Cx height;
  double k0 = 1.0;
  double length = 1.0;

  // (R^l, R^r, T); throws PoleEncountered at transmission poles.
  struct Amplitudes {
    Cx left_reflection;
    Cx right_reflection;
    Cx transmission;
  };
  Amplitudes amplitudes() const;
};

// Centered-difference residual of the dynamical identity
// (dM/dalpha) M^{-1} + i H(alpha) on the barrier closed form; O(h^2) in the
// step and ~0 exactly.
double barrier_hamiltonian_residual(const BarrierClosedForm& p, double alpha,
                                    double h);

}  // namespace scatter1d

#endif  // SCATTER1D_REFERENCE_HPP
