#include <cmath>

#include "doctest.h"
#include "scatter1d/design.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/jost.hpp"
#include "scatter1d/reference.hpp"

using namespace scatter1d;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Cx kI{0.0, 1.0};
}

TEST_CASE("free Jost solution is the incoming plane wave") {
  const double k = 1.4;
  const Potential p = Potential::barrier(Cx{0.0}, 2.0);
  const JostSolution j = solve_jost(p, k);
  for (double x : {0.0, 0.5, 1.3, 2.0}) {
    CHECK(std::abs(j.psi(x) - std::exp(-kI * k * x)) <= 1e-10);
    CHECK(std::abs(j.f_plus(x)) <= 1e-9);
    CHECK(std::abs(j.f_minus(x) + 2.0 * kI * k * std::exp(-kI * k * x)) <=
          1e-9);
  }
}

TEST_CASE("initial conditions are exact at the left support edge") {
  const double k = 0.9;
  // Support [-1.3, 0] puts the left edge away from zero.
  const Potential p = Potential::barrier(Cx{1.0, 0.5}, 1.3).parity_reflected();
  const double lo = p.support().lo;
  const JostSolution j = solve_jost(p, k);
  CHECK(j.psi(lo) == std::exp(-kI * k * lo));
  CHECK(j.dpsi(lo) == -kI * k * std::exp(-kI * k * lo));

  const SFunction s = solve_s(p, k);
  CHECK(s.s_at(lo) == std::exp(-2.0 * kI * k * lo));
  CHECK(s.ds_at(lo) == Cx{1.0});
}

TEST_CASE("S-function equivalence with the Jost solution") {
  const double k = 1.2;
  const Potential pots[] = {
      Potential::barrier(Cx{1.5, -0.7}, 1.8),
      Potential::modulated_exponential(Cx{0.5, 0.2}, k, 2.2)};
  for (const Potential& p : pots) {
    const JostSolution j = solve_jost(p, k);
    const SFunction s = solve_s(p, k);
    for (int i = 0; i <= 20; ++i) {
      const double a =
          p.support().lo + p.support().length() * double(i) / 20.0;
      const Cx via_s = std::exp(kI * k * a) * s.s_at(a);
      CHECK(std::abs(via_s - j.psi(a)) <= 1e-9);
    }
  }
}

TEST_CASE("free S-function is the identity map") {
  const double k = 1.1;
  const Potential p = Potential::barrier(Cx{0.0}, 1.5);
  const SFunction s = solve_s(p, k);
  CHECK(std::abs(s.s_at(1.5) - s.z_end()) <= 1e-10);
  CHECK(std::abs(s.ds_at(1.5) - 1.0) <= 1e-10);
}

TEST_CASE("Riccati route: zero potential and the closed-form barrier") {
  const double k = 1.3;
  CHECK(std::abs(solve_riccati(Potential::barrier(Cx{0.0}, 1.0), k)
                     .final_reflection()) <= 1e-12);

  const Cx height{1.1, 0.6};
  const double L = 1.4;
  const Potential p = Potential::barrier(height, L);
  const BarrierClosedForm ref{height, k, L};
  const Complex2x2 m = ref.full_transfer();
  const Cx want = m.m12 / m.m22;  // R^r of the full barrier
  CHECK(std::abs(solve_riccati(p, k).final_reflection() - want) <= 1e-7);
}

TEST_CASE("Riccati trajectory equals S/S' - z along the way") {
  const double k = 1.2;
  const Potential p = Potential::barrier(Cx{2.0, -0.9}, 1.6);
  const RiccatiTrajectory r = solve_riccati(p, k);
  const SFunction s = solve_s(p, k);
  for (int i = 1; i <= 20; ++i) {
    const double a = p.support().length() * double(i) / 20.0;
    const Cx via_s = s.s_at(a) / s.ds_at(a) - s.z_at(a);
    CHECK(std::abs(r.reflection_at(a) - via_s) <= 1e-7);
  }
}

TEST_CASE("equivalence chain: Riccati, S-form, and Jost truncated "
          "reflections") {
  DesignSpec spec;
  spec.k0 = 1.0;
  spec.length = 3.0 * kPi;
  spec.goal = DesignGoal::RightInvisible;
  spec.gamma = 1e-6;
  struct Case {
    Potential p;
    double k;
  } cases[] = {{Potential::barrier(Cx{1.3, 0.7}, 1.8), 1.2},
               {design_right_invisible(spec).potential, 1.0}};
  for (const Case& c : cases) {
    const RiccatiTrajectory r = solve_riccati(c.p, c.k);
    const SFunction s = solve_s(c.p, c.k);
    const JostSolution j = solve_jost(c.p, c.k);
    const Interval sup = c.p.support();
    for (int i = 1; i <= 20; ++i) {
      const double a = sup.lo + sup.length() * double(i) / 21.0;
      const Cx via_riccati = r.reflection_at(a);
      const Cx via_s = s.s_at(a) / s.ds_at(a) - s.z_at(a);
      const Cx via_jost = -std::exp(-2.0 * kI * c.k * a) * j.f_plus(a) /
                          j.f_minus(a);
      CHECK(std::abs(via_riccati - via_s) <= 1e-7);
      CHECK(std::abs(via_jost - via_s) <= 1e-7);
    }
  }
}

TEST_CASE("Riccati blows up at a transmission pole") {
  DesignSpec spec;
  spec.k0 = 1.0;
  spec.length = 3.0 * kPi / 4.0;
  spec.goal = DesignGoal::Lasing;
  const Potential p = design_lasing(spec).potential;
  CHECK_THROWS_AS(solve_riccati(p, spec.k0), RiccatiBlowUp);
}

TEST_CASE("Born-order linearity of the reflection in the strength") {
  const double k = 1.3;
  auto reflection_per_strength = [&](double c) {
    const Potential p = Potential::barrier(Cx{c * k * k, 0.4 * c * k * k}, 1.2);
    return solve_riccati(p, k).final_reflection() / c;
  };
  const Cx b1 = reflection_per_strength(1e-4);
  const Cx b2 = reflection_per_strength(1e-5);
  CHECK(std::abs(b1 - b2) <= 1e-3 * std::abs(b1));
}
