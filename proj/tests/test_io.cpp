#include <cmath>
#include <sstream>

#include "doctest.h"
#include "scatter1d/errors.hpp"
#include "scatter1d/io.hpp"

using namespace scatter1d;

TEST_CASE("format_full round-trips doubles") {
  for (double v : {1.0, -0.12345678901234567, 3.14159265358979312e-11, 0.0})
    CHECK(std::stod(format_full(v)) == v);
}

TEST_CASE("potential JSON round trip") {
  const Potential barrier = Potential::barrier(Cx{1.25, -0.5}, 2.0);
  const Potential back = potential_from_json(potential_to_json(barrier));
  for (double x : {-0.5, 0.0, 1.3, 2.0, 2.5})
    CHECK(back(x, 1.1) == barrier(x, 1.1));

  const Potential modexp =
      Potential::modulated_exponential(Cx{0.4, 0.1}, 1.3, 1.5);
  const Potential back2 = potential_from_json(potential_to_json(modexp));
  for (double x : {0.0, 0.7, 1.4})
    CHECK(back2(x, 2.0) == modexp(x, 2.0));

  std::vector<double> xs{0.0, 0.5, 1.0, 1.5};
  std::vector<Cx> vs{{0.0, 0.1}, {1.0, -0.2}, {0.5, 0.0}, {0.2, 0.3}};
  const Potential sampled = Potential::sampled(xs, vs);
  const Potential back3 = potential_from_json(potential_to_json(sampled));
  for (double x : {0.1, 0.6, 1.2})
    CHECK(std::abs(back3(x, 1.0) - sampled(x, 1.0)) <= 1e-15);
}

TEST_CASE("potential spec parsing from inline JSON") {
  const Potential p = potential_from_spec_string(
      R"({"kind":"barrier","height":[2.0,-1.0],"length":1.5})");
  CHECK(p(0.4, 1.0) == Cx{2.0, -1.0});

  // Scalar heights are accepted as real.
  const Potential q = potential_from_spec_string(
      R"({"kind":"barrier","height":3.0,"length":1.0})");
  CHECK(q(0.5, 1.0) == Cx{3.0});

  CHECK_THROWS_AS(potential_from_spec_string("{not json"), ConfigError);
  CHECK_THROWS_AS(potential_from_spec_string(R"({"kind":"sphere"})"),
                  ConfigError);
  CHECK_THROWS_AS(potential_from_spec_string("/no/such/file.json"),
                  ConfigError);
}

TEST_CASE("index_sampled spec evaluates k^2 (1 - n^2)") {
  nlohmann::json j;
  j["kind"] = "index_sampled";
  j["x"] = {0.0, 0.5, 1.0};
  j["n2_re"] = {1.5, 1.5, 1.5};
  j["n2_im"] = {0.0, 0.0, 0.0};
  const Potential p = potential_from_json(j);
  const double k = 2.0;
  CHECK(std::abs(p(0.25, k) - k * k * (1.0 - 1.5)) <= 1e-12);
  CHECK(p(1.2, k) == Cx{0.0});
}

TEST_CASE("sweep CSV layout") {
  std::vector<SweepRow> rows(2);
  rows[0].k = 1.0;
  ScatteringAmplitudes amps;
  amps.k = 1.0;
  amps.transmission = Cx{0.5, 0.5};
  rows[0].amps = amps;
  rows[0].route_deviation = 1e-12;
  rows[1].k = 2.0;  // singular row: no amplitudes

  std::ostringstream os;
  write_sweep_csv(os, rows);
  const std::string text = os.str();
  CHECK(text.find("k,re_T,im_T,abs_T,re_Rl") == 0);
  CHECK(text.find("nan") != std::string::npos);
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 3);
}

TEST_CASE("amplitudes JSON record carries flags and residuals") {
  ScatteringAmplitudes amps;
  amps.k = 1.0;
  amps.transmission = 1.0;
  const auto j = amplitudes_to_json(amps, classify(amps));
  CHECK(j["flags"]["bidirectional_invisible"].get<bool>());
  CHECK(j["residuals"].contains("unit_transmission"));
  CHECK(j["route"].get<std::string>() == "jost");
}
