#ifndef SCATTER1D_QUADRATURE_HPP
#define SCATTER1D_QUADRATURE_HPP

#include <functional>
#include <span>

#include "scatter1d/complex2x2.hpp"
#include "scatter1d/ode.hpp"

namespace scatter1d {

// Adaptive complex-valued quadrature of f over [x0, x1] (Gauss-Kronrod 15/7
// with global bisection). `breakpoints` forces panel edges at interior
// discontinuities. Throws NonFiniteIntegrand.
Cx quadrature_real(const std::function<Cx(double)>& f, double x0, double x1,
                   const IntegratorConfig& cfg = {},
                   std::span<const double> breakpoints = {});

// Circular arc w = e^{-2i phi}, phi in [phase_begin, phase_end], traversed
// clockwise in w. phase_end - phase_begin = m*pi covers the unit circle m
// times.
struct ArcPath {
  double phase_begin = 0.0;
  double phase_end = 0.0;

  // Number of complete circle traversals contained in the arc.
  int windings() const;
};

// Integral of g(w) dw along the arc, with dw = -2i e^{-2i phi} dphi.
Cx quadrature_arc(const std::function<Cx(Cx)>& g, const ArcPath& path,
                  const IntegratorConfig& cfg = {});

// Covering-space variant: the integrand may depend on the arc parameter and
// not just on w (needed when the arc winds and the integrand is multivalued
// in w).
Cx quadrature_arc(const std::function<Cx(double, Cx)>& g, const ArcPath& path,
                  const IntegratorConfig& cfg = {});

}  // namespace scatter1d

#endif  // SCATTER1D_QUADRATURE_HPP
