#include <cmath>
#include <random>

#include "doctest.h"
#include "scatter1d/amplitudes.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/reference.hpp"

using namespace scatter1d;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Cx kI{0.0, 1.0};

ScatteringAmplitudes closed_barrier_amps(Cx height, double k, double L) {
  const BarrierClosedForm ref{height, k, L};
  return amplitudes_from_matrix(ref.full_transfer(), k);
}

double amp_dist(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b) {
  return std::max({std::abs(a.left_reflection - b.left_reflection),
                   std::abs(a.right_reflection - b.right_reflection),
                   std::abs(a.transmission - b.transmission)});
}
}  // namespace

TEST_CASE("matrix dictionary basics") {
  const auto free = amplitudes_from_matrix(Complex2x2::identity(), 1.0);
  CHECK(free.left_reflection == Cx{0.0});
  CHECK(free.right_reflection == Cx{0.0});
  CHECK(free.transmission == Cx{1.0});

  const Complex2x2 hand{kI, 0.0, 0.0, -kI};
  const auto amps = amplitudes_from_matrix(hand, 1.3);
  CHECK(std::abs(amps.transmission - kI) <= 1e-15);
  CHECK(std::abs(amps.right_reflection) <= 1e-15);
  CHECK(std::abs(amps.left_reflection) <= 1e-15);

  CHECK_THROWS_AS(
      amplitudes_from_matrix(Complex2x2{2.0, 0.0, 0.0, 1.0}, 1.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      amplitudes_from_matrix(Complex2x2{0.0, kI, kI, 1e-14}, 1.0),
      SpectralSingularityError);
}

TEST_CASE("matrix round trip") {
  ScatteringAmplitudes free;
  free.transmission = 1.0;
  CHECK(max_abs_diff(matrix_from_amplitudes(free), Complex2x2::identity()) ==
        0.0);

  std::mt19937_64 rng(3u);
  auto u = [&rng] { return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0; };
  for (int i = 0; i < 40; ++i) {
    ScatteringAmplitudes a;
    a.k = 1.0;
    a.left_reflection = Cx{u(), u()};
    a.right_reflection = Cx{u(), u()};
    a.transmission = Cx{u() + 1.5, u()};
    const Complex2x2 m = matrix_from_amplitudes(a);
    CHECK(std::abs(m.det() - 1.0) <= 1e-12);  // the dictionary forces det = 1
    const ScatteringAmplitudes back = amplitudes_from_matrix(m, a.k);
    CHECK(amp_dist(a, back) <= 1e-12);
    // M11 consistency.
    CHECK(std::abs(m.m11 - (a.transmission - a.left_reflection *
                                                 a.right_reflection /
                                                 a.transmission)) <= 1e-12);
  }

  ScatteringAmplitudes dead;
  dead.transmission = 0.0;
  CHECK_THROWS_AS(matrix_from_amplitudes(dead), ZeroTransmission);
}

TEST_CASE("jost-route amplitudes against the closed barrier form") {
  const double k = 1.2;
  const Cx height{1.8, -0.9};
  const double L = 1.5;
  const Potential p = Potential::barrier(height, L);
  const JostSolution j = solve_jost(p, k);
  const auto got = amplitudes_from_jost(j, p, L);
  CHECK(amp_dist(got, closed_barrier_amps(height, k, L)) <= 1e-8);
}

TEST_CASE("jost route: zero potential and the vanishing-phase exponential") {
  const double k = 1.1;
  const Potential zero = Potential::barrier(Cx{0.0}, 1.0);
  const JostSolution j = solve_jost(zero, k);
  const auto amps = amplitudes_from_jost(j, zero, 1.0);
  CHECK(std::abs(amps.transmission - 1.0) <= 1e-10);
  CHECK(std::abs(amps.left_reflection) <= 1e-10);
  CHECK(std::abs(amps.right_reflection) <= 1e-10);

  // k0 L = pi makes the modulated exponential invisible at k = k0.
  const double k0 = 1.2;
  const Potential mod =
      Potential::modulated_exponential(0.5 * k0 * k0, k0, kPi / k0);
  const auto inv = scatter(mod, k0, Route::Jost);
  CHECK(std::abs(inv.transmission - 1.0) <= 1e-9);
  CHECK(std::abs(inv.left_reflection) <= 1e-9);
  CHECK(std::abs(inv.right_reflection) <= 1e-9);
}

TEST_CASE("s-route amplitudes agree with the jost route") {
  const double k = 1.4;
  const Potential p = Potential::barrier(Cx{2.4, 1.0}, 1.3);
  const auto via_s = scatter(p, k, Route::SForm);
  const auto via_jost = scatter(p, k, Route::Jost);
  CHECK(amp_dist(via_s, via_jost) <= 1e-8);
  CHECK(amp_dist(via_s, closed_barrier_amps(Cx{2.4, 1.0}, k, 1.3)) <= 1e-8);
}

TEST_CASE("auto route records the cross-check deviation") {
  const Potential p = Potential::barrier(Cx{1.0, 0.3}, 1.1);
  const auto amps = scatter(p, 1.5, Route::Auto);
  CHECK(amps.route == Route::Auto);
  CHECK(amps.route_deviation <= 1e-8);
  CHECK(amps.route_deviation >= 0.0);
}

TEST_CASE("scatter on an empty potential") {
  const auto amps = scatter(Potential::zero(), 2.0);
  CHECK(amps.transmission == Cx{1.0});
  CHECK(amps.left_reflection == Cx{0.0});
  CHECK(amps.right_reflection == Cx{0.0});
}

TEST_CASE("parity covariance swaps the reflections") {
  const double k = 1.3;
  const Potential p = Potential::modulated_exponential(Cx{0.9, 0.4}, 1.1, 1.7);
  const auto direct = scatter(p, k, Route::Jost);
  const auto mirrored = scatter(p.parity_reflected(), k, Route::Jost);
  CHECK(std::abs(direct.transmission - mirrored.transmission) <= 1e-8);
  CHECK(std::abs(direct.left_reflection - mirrored.right_reflection) <= 1e-8);
  CHECK(std::abs(direct.right_reflection - mirrored.left_reflection) <= 1e-8);
}

TEST_CASE("unitarity for a real potential at real k") {
  const Potential p = Potential::barrier(Cx{2.8}, 1.2);
  for (double k : {0.8, 1.4, 2.6}) {
    const auto a = scatter(p, k, Route::Jost);
    CHECK(std::abs(std::norm(a.left_reflection) +
                   std::norm(a.transmission) - 1.0) <= 1e-8);
    CHECK(std::abs(std::norm(a.right_reflection) +
                   std::norm(a.transmission) - 1.0) <= 1e-8);
  }
}

TEST_CASE("truncated amplitudes from one solve match fresh solves") {
  const double k = 1.2;
  const Potential p = Potential::barrier(Cx{1.6, 0.8}, 1.9);
  const JostSolution j = solve_jost(p, k);
  for (double a : {0.4, 1.0, 1.6}) {
    const auto family = amplitudes_from_jost(j, p, a);
    const auto fresh = scatter(p.truncated(a), k, Route::Jost);
    CHECK(amp_dist(family, fresh) <= 1e-8);
  }
}

TEST_CASE("classification dictionary") {
  ScatteringAmplitudes free;
  free.k = 1.0;
  free.transmission = 1.0;
  const SpectralFlags f = classify(free);
  CHECK(f.right_reflectionless);
  CHECK(f.left_reflectionless);
  CHECK(f.bidirectional_invisible);
  CHECK_FALSE(f.right_invisible);
  CHECK_FALSE(f.left_invisible);
  CHECK_FALSE(f.spectral_singularity);

  ScatteringAmplitudes uni;
  uni.k = 1.0;
  uni.transmission = 1.0;
  uni.left_reflection = Cx{0.0, 2e-4};
  const SpectralFlags g = classify(uni);
  CHECK(g.right_invisible);
  CHECK_FALSE(g.left_invisible);
  CHECK_FALSE(g.bidirectional_invisible);
  CHECK(g.left_reflection_residual == doctest::Approx(2e-4));

  // Matrix-based classification survives an exact transmission pole.
  const SpectralFlags sing =
      classify_matrix(Complex2x2{0.3, kI, kI, 0.0});
  CHECK(sing.spectral_singularity);
  CHECK_FALSE(sing.right_reflectionless);
}
