#ifndef SCATTER1D_JOST_HPP
#define SCATTER1D_JOST_HPP

#include "scatter1d/ode.hpp"
#include "scatter1d/potential.hpp"

namespace scatter1d {

// Solution psi of -psi'' + (v - k^2) psi = 0 fixed by the left-edge data
// psi(a-) = e^{-ik a-}, psi'(a-) = -ik e^{-ik a-}; for x <= a- it coincides
// with the incoming plane wave e^{-ikx}.
class JostSolution {
 public:
  JostSolution(Potential p, double k, OdeTrajectory ode);

  double k() const { return k_; }
  Interval support() const { return potential_.support(); }
  const Potential& potential() const { return potential_; }

  Cx psi(double x) const;
  Cx dpsi(double x) const;

  // F+-(k, x) = psi'(x) +- ik psi(x). All amplitudes are ratios of these.
  Cx f_plus(double x) const;
  Cx f_minus(double x) const;

  const OdeTrajectory& ode() const { return ode_; }

 private:
  void eval(double x, Cx& psi, Cx& dpsi) const;

  Potential potential_;
  double k_;
  OdeTrajectory ode_;
};

JostSolution solve_jost(const Potential& p, double k,
                        const IntegratorConfig& cfg = {});

// S along the arc z = e^{-2ika}, a in [a-, a+], solving
//   z^2 S''(z) + (v / 4k^2) S(z) = 0,  S(z-) = z-,  S'(z-) = 1,
// integrated in the real variable a to stay single-valued over windings.
// Related to the Jost solution by psi(a) = e^{ika} S(e^{-2ika}).
class SFunction {
 public:
  SFunction(Potential p, double k, OdeTrajectory ode);

  double k() const { return k_; }
  Interval support() const { return potential_.support(); }
  const Potential& potential() const { return potential_; }

  Cx z_at(double a) const;
  Cx z_start() const { return z_at(support().lo); }
  Cx z_end() const { return z_at(support().hi); }

  Cx s_at(double a) const;    // S(z(a))
  Cx ds_at(double a) const;   // dS/dz at z(a)

  const OdeTrajectory& ode() const { return ode_; }

 private:
  Potential potential_;
  double k_;
  OdeTrajectory ode_;
};

SFunction solve_s(const Potential& p, double k,
                  const IntegratorConfig& cfg = {});

// Right reflection amplitude of the truncated potential, integrated directly
// from its Riccati equation with R(z-) = 0. Near a transmission pole the
// solution escapes; that is reported as RiccatiBlowUp (fall back to the
// linear S equation there).
class RiccatiTrajectory {
 public:
  RiccatiTrajectory(Potential p, double k, OdeTrajectory ode);

  double k() const { return k_; }
  Interval support() const { return potential_.support(); }

  Cx reflection_at(double a) const;  // R^r of v*theta(a - x)
  Cx final_reflection() const;

  const OdeTrajectory& ode() const { return ode_; }

 private:
  Potential potential_;
  double k_;
  OdeTrajectory ode_;
};

RiccatiTrajectory solve_riccati(const Potential& p, double k,
                                const IntegratorConfig& cfg = {});

}  // namespace scatter1d

#endif  // SCATTER1D_JOST_HPP
