#ifndef SCATTER1D_VERIFY_HPP
#define SCATTER1D_VERIFY_HPP

#include <string>
#include <vector>

#include "scatter1d/ode.hpp"

namespace scatter1d {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;   // measured worst-case deviation
  double threshold = 0.0;  // pass bound the residual was held against
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Full cross-check suite: closed-form oracle agreement of all three routes,
// determinant/composition laws, closed-form exponential potential, unitarity,
// the three designed profiles, contour m-scaling, the figure-shape checks,
// the one-solve truncation family, and the finite-difference identity.
// `tolerance_scale` multiplies every pass threshold (1.0 = nominal).
VerificationReport run_verification(const IntegratorConfig& cfg = {},
                                    double tolerance_scale = 1.0);

}  // namespace scatter1d

#endif  // SCATTER1D_VERIFY_HPP
