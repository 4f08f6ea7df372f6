#ifndef SCATTER1D_ODE_HPP
#define SCATTER1D_ODE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "scatter1d/complex2x2.hpp"

namespace scatter1d {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t max_steps = 1000000;
  double initial_step = 0.0;  // 0 selects the step size automatically
};

// rhs(t, y, dydt): fill dydt with the derivative at (t, y).
using OdeRhs =
    std::function<void(double, std::span<const Cx>, std::span<Cx>)>;

// Dense solution of a complex ODE system on [t_begin, t_end]. Each accepted
// step stores interpolation coefficients, so eval() works anywhere in range
// with accuracy comparable to the step endpoints.
class OdeTrajectory {
 public:
  std::size_t dimension() const { return dim_; }
  double t_begin() const { return t_begin_; }
  double t_end() const { return t_end_; }
  std::size_t step_count() const { return segments_.size(); }

  // Accepted step boundaries, t_begin first, t_end last.
  std::vector<double> step_times() const;

  std::vector<Cx> eval(double t) const;
  void eval(double t, std::span<Cx> out) const;
  std::vector<Cx> final_state() const { return final_state_; }

 private:
  friend OdeTrajectory integrate_ode(const OdeRhs&, double, double,
                                     std::vector<Cx>,
                                     const IntegratorConfig&,
                                     std::span<const double>);

  struct Segment {
    double t0;
    double h;
    std::vector<Cx> r;  // 8 * dim interpolation coefficients
  };

  std::size_t dim_ = 0;
  double t_begin_ = 0.0;
  double t_end_ = 0.0;
  std::vector<Segment> segments_;
  std::vector<Cx> initial_state_;
  std::vector<Cx> final_state_;
};

// Adaptive embedded Runge-Kutta integration (8th order pair with dense
// output) of y' = rhs(t, y) from t0 to t1 (t0 <= t1). `breakpoints` lists
// interior points where the right-hand side is discontinuous; integration
// restarts there so the stepper never straddles a jump.
//
// Throws StepLimitExceeded or NonFiniteState.
OdeTrajectory integrate_ode(const OdeRhs& rhs, double t0, double t1,
                            std::vector<Cx> y0,
                            const IntegratorConfig& cfg = {},
                            std::span<const double> breakpoints = {});

}  // namespace scatter1d

#endif  // SCATTER1D_ODE_HPP
