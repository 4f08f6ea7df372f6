#include <cmath>
#include <random>

#include "doctest.h"
#include "scatter1d/potential.hpp"

using namespace scatter1d;

namespace {
const Cx kI{0.0, 1.0};

double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
}
}  // namespace

TEST_CASE("barrier evaluation") {
  const Cx height{2.0, -0.7};
  const Potential p = Potential::barrier(height, 1.5);
  CHECK(p(0.75, 1.0) == height);
  CHECK(p(0.0, 1.0) == height);
  CHECK(p(1.5, 1.0) == height);
  CHECK(p(1.5 + 1e-12, 1.0) == Cx{0.0});
  CHECK(p(-1e-12, 1.0) == Cx{0.0});
  CHECK(p(2.5, 2.0) == Cx{0.0});
  CHECK(p.support().lo == 0.0);
  CHECK(p.support().hi == 1.5);
}

TEST_CASE("modulated exponential evaluation") {
  const Cx height{0.3, 0.1};
  const double k0 = 1.2, L = 2.0;
  const Potential p = Potential::modulated_exponential(height, k0, L);
  for (double x : {0.0, 0.4, 1.9}) {
    CHECK(std::abs(p(x, 7.0) - height * std::exp(-4.0 * kI * k0 * x)) <=
          1e-15);
  }
  CHECK(p(L + 0.1, 1.0) == Cx{0.0});
}

TEST_CASE("truncation is theta(a - x) pointwise") {
  std::mt19937_64 rng(5u);
  const Potential pots[] = {
      Potential::barrier(Cx{1.0, 2.0}, 2.0),
      Potential::modulated_exponential(Cx{0.5}, 1.0, 2.0)};
  for (const Potential& p : pots) {
    const double a = 0.8;
    const Potential t = p.truncated(a);
    CHECK(t.support().hi == a);
    for (int i = 0; i < 200; ++i) {
      const double x = urand(rng, -0.5, 2.5);
      const Cx want = x <= a ? p(x, 1.3) : Cx{0.0};
      CHECK(t(x, 1.3) == want);
    }
    // theta inactive at the right edge, fully active at the left edge.
    const Potential full = p.truncated(p.support().hi);
    const Potential none = p.truncated(p.support().lo);
    for (int i = 0; i < 50; ++i) {
      const double x = urand(rng, -0.5, 2.5);
      CHECK(full(x, 1.3) == p(x, 1.3));
    }
    CHECK(none.support().length() == 0.0);
    CHECK(none(p.support().lo + 0.1, 1.3) == Cx{0.0});
  }
}

TEST_CASE("truncated barrier equals the shorter barrier") {
  const Cx height{0.9, 0.2};
  const Potential cut = Potential::barrier(height, 2.0).truncated(1.0);
  const Potential direct = Potential::barrier(height, 1.0);
  for (double x : {-0.1, 0.0, 0.3, 0.999, 1.0, 1.001, 1.7, 2.3})
    CHECK(cut(x, 1.0) == direct(x, 1.0));
}

TEST_CASE("truncation plus remainder reassembles the potential") {
  const Potential p = Potential::modulated_exponential(Cx{1.0, -0.5}, 0.9, 1.7);
  const double a = 0.6;
  const Potential lower = p.truncated(a);
  const Potential upper = p.upper_remainder(a);
  std::mt19937_64 rng(17u);
  for (int i = 0; i < 200; ++i) {
    const double x = urand(rng, -0.2, 2.0);
    if (x == a) continue;  // both windows are closed at the cut itself
    CHECK(lower(x, 1.0) + upper(x, 1.0) == p(x, 1.0));
  }
  CHECK(upper(a, 1.0) == p(a, 1.0));
  CHECK(upper(a - 1e-12, 1.0) == Cx{0.0});
  CHECK(upper.support().lo == a);
}

TEST_CASE("parity reflection") {
  const Potential p = Potential::modulated_exponential(Cx{0.7}, 1.1, 1.4);
  const Potential q = p.parity_reflected();
  CHECK(q.support().lo == -1.4);
  CHECK(q.support().hi == 0.0);
  std::mt19937_64 rng(23u);
  for (int i = 0; i < 200; ++i) {
    const double x = urand(rng, -2.0, 2.0);
    CHECK(q(x, 1.0) == p(-x, 1.0));
    CHECK(q.parity_reflected()(x, 1.0) == p(x, 1.0));
  }
  // Reflected modulation flips the phase sign.
  CHECK(std::abs(q(-0.5, 1.0) - 0.7 * std::exp(4.0 * kI * 1.1 * (-0.5))) <=
        1e-15);

  // A symmetric barrier centered at 0 maps onto itself.
  const Potential sym = Potential::barrier(Cx{2.0}, 1.0)
                            .parity_reflected();  // support [-1, 0]
  for (double x : {-0.9, -0.5, -0.1})
    CHECK(sym(x, 1.0) == Cx{2.0});
}

TEST_CASE("index profile dictionary") {
  const double k = 1.7;
  const Potential vac = Potential::from_index([](double) { return Cx{1.0}; },
                                              k, Interval{0.0, 1.0});
  CHECK(vac(0.5, k) == Cx{0.0});

  const Cx height{0.8, -0.3};
  const Potential via_index = Potential::from_index(
      [height, k](double) { return Cx{1.0} - height / (k * k); }, k,
      Interval{0.0, 2.0});
  const Potential direct = Potential::barrier(height, 2.0);
  for (double x : {0.0, 0.6, 1.999})
    CHECK(std::abs(via_index(x, k) - direct(x, k)) <= 1e-14);
}

TEST_CASE("sampled potential interpolates smoothly") {
  std::vector<double> xs;
  std::vector<Cx> vs;
  for (int i = 0; i <= 64; ++i) {
    const double x = 2.0 * i / 64.0;
    xs.push_back(x);
    vs.push_back(Cx{std::sin(1.7 * x), std::cos(0.9 * x)});
  }
  const Potential p = Potential::sampled(xs, vs);
  for (double x : {0.11, 0.77, 1.33, 1.91}) {
    const Cx want{std::sin(1.7 * x), std::cos(0.9 * x)};
    CHECK(std::abs(p(x, 1.0) - want) <= 2e-6);
  }
  CHECK(p(-0.1, 1.0) == Cx{0.0});
  CHECK(p(2.1, 1.0) == Cx{0.0});
}
