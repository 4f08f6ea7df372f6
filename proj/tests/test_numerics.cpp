#include <cmath>
#include <random>

#include "doctest.h"
#include "scatter1d/complex2x2.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/ode.hpp"
#include "scatter1d/quadrature.hpp"

using namespace scatter1d;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Cx kI{0.0, 1.0};

Complex2x2 random_matrix(std::mt19937_64& rng) {
  auto u = [&rng] { return 20.0 * (double(rng() >> 11) * 0x1.0p-53) - 10.0; };
  return {{u(), u()}, {u(), u()}, {u(), u()}, {u(), u()}};
}
}  // namespace

TEST_CASE("Complex2x2 algebra") {
  std::mt19937_64 rng(11u);
  for (int i = 0; i < 50; ++i) {
    const Complex2x2 a = random_matrix(rng);
    const Complex2x2 b = random_matrix(rng);
    const Complex2x2 c = random_matrix(rng);
    CHECK(std::abs((a * b).det() - a.det() * b.det()) <=
          1e-12 * (1.0 + std::abs(a.det() * b.det())));
    CHECK(max_abs_diff((a * b) * c, a * (b * c)) <=
          1e-12 * std::max(1.0, ((a * b) * c).max_abs()));
    if (std::abs(a.det()) > 1e-6)
      CHECK(max_abs_diff(a * a.inverse(), Complex2x2::identity()) <= 1e-10);
  }
  CHECK(Complex2x2::identity().det() == Cx{1.0});
}

TEST_CASE("integrate_ode: zero field stays constant") {
  auto rhs = [](double, std::span<const Cx>, std::span<Cx> dy) {
    dy[0] = 0.0;
    dy[1] = 0.0;
  };
  const OdeTrajectory traj = integrate_ode(rhs, 0.0, 2.0, {Cx{1.0}, Cx{0.0}});
  const auto y = traj.eval(1.3);
  CHECK(y[0] == Cx{1.0});
  CHECK(y[1] == Cx{0.0});
}

TEST_CASE("integrate_ode: analytic exponential endpoint and dense output") {
  auto rhs = [](double, std::span<const Cx> y, std::span<Cx> dy) {
    dy[0] = kI * y[0];
  };
  const OdeTrajectory traj = integrate_ode(rhs, 0.0, kPi, {Cx{1.0}});
  CHECK(std::abs(traj.final_state()[0] - Cx{-1.0}) <= 1e-9);
  for (int i = 0; i <= 100; ++i) {
    const double t = kPi * i / 100.0;
    CHECK(std::abs(traj.eval(t)[0] - std::exp(kI * t)) <= 1e-8);
  }
}

TEST_CASE("integrate_ode: tighter tolerances shrink the error") {
  auto rhs = [](double, std::span<const Cx> y, std::span<Cx> dy) {
    dy[0] = kI * y[0];
  };
  auto error_at = [&](double tol) {
    IntegratorConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = tol * 1e-2;
    const OdeTrajectory traj = integrate_ode(rhs, 0.0, kPi, {Cx{1.0}}, cfg);
    return std::abs(traj.final_state()[0] + 1.0);
  };
  const double coarse = error_at(1e-5);
  const double mid = error_at(5e-6);
  const double fine = error_at(1e-9);
  CHECK(mid <= coarse);
  CHECK(fine < 1e-3 * coarse);
}

TEST_CASE("integrate_ode: breakpoints across a jump in the rhs") {
  // y' = step(t) with a jump at t = 1; exact integral is piecewise linear.
  auto rhs = [](double t, std::span<const Cx>, std::span<Cx> dy) {
    dy[0] = t < 1.0 ? Cx{1.0} : Cx{3.0};
  };
  const double breaks[] = {1.0};
  const OdeTrajectory traj =
      integrate_ode(rhs, 0.0, 2.0, {Cx{0.0}}, {}, breaks);
  CHECK(std::abs(traj.final_state()[0] - Cx{4.0}) <= 1e-10);
}

TEST_CASE("integrate_ode error paths") {
  auto rhs = [](double, std::span<const Cx> y, std::span<Cx> dy) {
    dy[0] = 100.0 * y[0];
  };
  IntegratorConfig cfg;
  cfg.max_steps = 3;
  CHECK_THROWS_AS(integrate_ode(rhs, 0.0, 10.0, {Cx{1.0}}, cfg),
                  StepLimitExceeded);

  IntegratorConfig invalid_cfg;
  invalid_cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(integrate_ode(rhs, 0.0, 1.0, {Cx{1.0}}, invalid_cfg),
                  std::invalid_argument);

  auto bad = [](double, std::span<const Cx>, std::span<Cx> dy) {
    dy[0] = Cx{std::nan(""), 0.0};
  };
  CHECK_THROWS_AS(integrate_ode(bad, 0.0, 1.0, {Cx{1.0}}), NonFiniteState);
}

TEST_CASE("quadrature_real basics") {
  CHECK(std::abs(quadrature_real([](double) { return Cx{0.0}; }, 0.0, 1.0)) ==
        0.0);
  const Cx got =
      quadrature_real([](double x) { return std::exp(kI * x); }, 0.0, kPi);
  CHECK(std::abs(got - 2.0 * kI) <= 1e-12);
  // Orientation flips with the interval.
  const Cx rev =
      quadrature_real([](double x) { return std::exp(kI * x); }, kPi, 0.0);
  CHECK(std::abs(rev + 2.0 * kI) <= 1e-12);

  CHECK_THROWS_AS(quadrature_real(
                      [](double x) {
                        return x > 0.4 ? Cx{std::nan(""), 0.0} : Cx{1.0};
                      },
                      0.0, 1.0),
                  NonFiniteIntegrand);
}

TEST_CASE("quadrature_arc: windings and residues") {
  // Entire integrand over a closed contour vanishes.
  const Cx closed =
      quadrature_arc([](Cx) { return Cx{1.0}; }, ArcPath{0.0, kPi});
  CHECK(std::abs(closed) <= 1e-12);

  // 1/w over one clockwise winding is -2 pi i.
  const Cx one =
      quadrature_arc([](Cx w) { return 1.0 / w; }, ArcPath{0.0, kPi});
  CHECK(std::abs(one + 2.0 * kPi * kI) <= 1e-10);

  for (int m : {2, 3, 5}) {
    const Cx many =
        quadrature_arc([](Cx w) { return 1.0 / w; }, ArcPath{0.0, m * kPi});
    CHECK(std::abs(many - double(m) * one) <= 1e-10 * std::abs(many));
    CHECK(ArcPath{0.0, m * kPi}.windings() == m);
  }
}

TEST_CASE("quadrature_arc covering-space overload tracks the parameter") {
  // Integral of dphi along the arc, written through the w-form.
  const Cx got = quadrature_arc(
      [](double phi, Cx w) { return phi / (-2.0 * kI * w); },
      ArcPath{0.0, 2.0 * kPi});
  CHECK(std::abs(got - 2.0 * kPi * kPi) <= 1e-9);
}
