#include <cmath>
#include <random>

#include "doctest.h"
#include "scatter1d/design.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/evolution.hpp"
#include "scatter1d/reference.hpp"

using namespace scatter1d;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Cx kI{0.0, 1.0};
}

TEST_CASE("matrix hamiltonian structure") {
  const double k = 1.3, L = 2.0;
  const Cx height{0.8, -0.4};
  const MatrixHamiltonian ham{Potential::barrier(height, L), k};

  CHECK(max_abs_diff(ham(-0.5), Complex2x2::zero()) == 0.0);
  CHECK(max_abs_diff(ham(k * L + 0.5), Complex2x2::zero()) == 0.0);

  const double tau = k * L / 2.0;
  const Complex2x2 h = ham(tau);
  const Cx c = height / (2.0 * k * k);
  CHECK(std::abs(h.m11 - c) <= 1e-15);
  CHECK(std::abs(h.m12 - c * std::exp(-kI * k * L)) <= 1e-14);
  CHECK(std::abs(h.m21 + c * std::exp(kI * k * L)) <= 1e-14);
  CHECK(h.m11 + h.m22 == Cx{0.0});  // traceless exactly
}

TEST_CASE("evolution of the zero potential is the identity") {
  const Potential p = Potential::barrier(Cx{0.0}, 1.0);
  const TransferTrajectory traj = evolve_transfer(p, 1.0);
  CHECK(max_abs_diff(traj.final_matrix(), Complex2x2::identity()) <= 1e-12);
  CHECK(max_abs_diff(evolve_transfer(Potential::zero(), 1.0).final_matrix(),
                     Complex2x2::identity()) == 0.0);
}

TEST_CASE("evolution matches the barrier hand case") {
  const double k = 1.3;
  const Potential p = Potential::barrier(-3.0 * k * k, (kPi / 2.0) / k);
  const Complex2x2 m = evolve_transfer(p, k).final_matrix();
  CHECK(std::abs(m.m11 - kI) <= 1e-9);
  CHECK(std::abs(m.m12) <= 1e-9);
  CHECK(std::abs(m.m21) <= 1e-9);
  CHECK(std::abs(m.m22 + kI) <= 1e-9);
}

TEST_CASE("evolution matches the closed form along the trajectory") {
  std::mt19937_64 rng(47u);
  auto urand = [&rng](double lo, double hi) {
    return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 3; ++trial) {
    const double k = urand(0.7, 2.0);
    const double L = urand(0.6, 2.2);
    const Cx height = k * k * Cx{urand(-3.0, 3.0), urand(-1.5, 1.5)};
    const Potential p = Potential::barrier(height, L);
    const BarrierClosedForm ref{height, k, L};

    const TransferTrajectory traj = evolve_transfer(p, k);
    CHECK(traj.max_det_defect() <= 1e-9);
    for (int i = 0; i <= 16; ++i) {
      const double alpha = k * L * i / 16.0;
      CHECK(max_abs_diff(traj.at(alpha), ref.transfer_at(alpha)) <= 1e-8);
    }
    // Frozen outside the support.
    CHECK(max_abs_diff(traj.at(-1.0), Complex2x2::identity()) == 0.0);
    CHECK(max_abs_diff(traj.at(k * L + 2.0), traj.final_matrix()) == 0.0);
  }
}

TEST_CASE("composition property") {
  CHECK(composition_defect(Potential::barrier(Cx{0.0}, 1.0), 1.0, 0.5) <=
        1e-12);

  const Potential barrier = Potential::barrier(Cx{1.9, 0.8}, 1.6);
  CHECK(composition_defect(barrier, 1.2, 0.8) <= 1e-9);

  DesignSpec spec;
  spec.k0 = 1.0;
  spec.length = 3.0 * kPi;
  spec.goal = DesignGoal::RightInvisible;
  spec.gamma = 1e-6;
  const Potential designed = design_right_invisible(spec).potential;
  CHECK(composition_defect(designed, 1.0, spec.length / 3.0) <= 1e-8);
}

TEST_CASE("finite-difference check of the dynamical equation on a numeric "
          "trajectory") {
  const double k = 1.1;
  const Cx height{1.2, -0.6};
  const Potential p = Potential::barrier(height, 2.0);
  const TransferTrajectory traj = evolve_transfer(p, k);
  const MatrixHamiltonian ham{p, k};

  const double h = 1e-4;
  for (double alpha : {0.4, 1.0, 1.7}) {
    const Complex2x2 deriv =
        Cx{1.0 / (2.0 * h)} * (traj.at(alpha + h) - traj.at(alpha - h));
    const Complex2x2 residual =
        deriv * traj.at(alpha).inverse() - (Cx{0.0, -1.0}) * ham(alpha);
    CHECK(residual.max_abs() <= 1e-6);
  }
}
