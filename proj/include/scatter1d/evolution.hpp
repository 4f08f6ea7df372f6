#ifndef SCATTER1D_EVOLUTION_HPP
#define SCATTER1D_EVOLUTION_HPP

#include "scatter1d/ode.hpp"
#include "scatter1d/potential.hpp"

namespace scatter1d {

// Traceless 2x2 Hamiltonian generating the transfer matrix:
//   H(tau) = v(tau/k) / (2 k^2) * [[1, e^{-2i tau}], [-e^{2i tau}, -1]]
// with tau = k x. Vanishes wherever v does.
struct MatrixHamiltonian {
  Potential potential;
  double k = 1.0;

  Complex2x2 operator()(double tau) const;
};

// Transfer matrix of the truncated potential as a function of alpha = k a,
// obtained by integrating i dM/dalpha = H(alpha) M from the left support
// edge (M = identity there).
class TransferTrajectory {
 public:
  TransferTrajectory(double k, double alpha_begin, double alpha_end,
                     OdeTrajectory ode);

  double k() const { return k_; }
  double alpha_begin() const { return alpha_begin_; }
  double alpha_end() const { return alpha_end_; }

  // M(alpha): identity left of the support, frozen right of it.
  Complex2x2 at(double alpha) const;
  Complex2x2 final_matrix() const;

  // max |det M - 1| over the accepted step points.
  double max_det_defect() const;

  const OdeTrajectory& ode() const { return ode_; }

 private:
  double k_;
  double alpha_begin_;
  double alpha_end_;
  OdeTrajectory ode_;
};

// Integrates the matrix equation across the support of p at wavenumber k.
// Throws DeterminantDrift if |det M - 1| exceeds 1e-6 along the way.
TransferTrajectory evolve_transfer(const Potential& p, double k,
                                   const IntegratorConfig& cfg = {});

// Max-norm of M2 M1 - M, where M1 belongs to the part of p left of split_a,
// M2 to the rest, and M to the whole potential.
double composition_defect(const Potential& p, double k, double split_a,
                          const IntegratorConfig& cfg = {});

}  // namespace scatter1d

#endif  // SCATTER1D_EVOLUTION_HPP
