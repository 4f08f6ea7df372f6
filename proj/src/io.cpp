#include "scatter1d/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "scatter1d/errors.hpp"

namespace scatter1d {

namespace {

using nlohmann::json;

std::vector<double> doubles_from(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ConfigError(std::string("potential spec: missing array '") + field +
                      "'");
  return j[field].get<std::vector<double>>();
}

std::vector<Cx> complexes_from(const json& j, const char* re_field,
                               const char* im_field) {
  const std::vector<double> re = doubles_from(j, re_field);
  std::vector<double> im(re.size(), 0.0);
  if (j.contains(im_field)) im = doubles_from(j, im_field);
  if (im.size() != re.size())
    throw ConfigError("potential spec: re/im arrays differ in length");
  std::vector<Cx> out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
  return out;
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json complex_to_json(Cx v) { return json::array({v.real(), v.imag()}); }

Cx complex_from_json(const json& j) {
  if (j.is_number()) return Cx{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2)
    return Cx{j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("expected a number or [re, im] pair");
}

Potential potential_from_json(const json& j) {
  if (!j.contains("kind")) throw ConfigError("potential spec: missing 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "zero") return Potential::zero();
    if (kind == "barrier")
      return Potential::barrier(complex_from_json(j.at("height")),
                                j.at("length").get<double>());
    if (kind == "modulated_exponential")
      return Potential::modulated_exponential(
          complex_from_json(j.at("height")), j.at("k0").get<double>(),
          j.at("length").get<double>());
    if (kind == "sampled")
      return Potential::sampled(doubles_from(j, "x"),
                                complexes_from(j, "v_re", "v_im"));
    if (kind == "index_sampled") {
      std::vector<double> x = doubles_from(j, "x");
      std::vector<Cx> n2 = complexes_from(j, "n2_re", "n2_im");
      if (x.size() != n2.size() || x.size() < 2)
        throw ConfigError("index_sampled: bad arrays");
      // Reuse the sampled-kind spline on n^2 via a closure in v.
      Potential n2_spline = Potential::sampled(x, n2);
      const Interval sup{x.front(), x.back()};
      return Potential::closure(
          [n2_spline](double xx, double k) {
            return k * k * (Cx{1.0} - n2_spline(xx, 1.0));
          },
          sup);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("potential spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("potential spec: ") + e.what());
  }
  throw ConfigError("potential spec: unknown kind '" + kind + "'");
}

json potential_to_json(const Potential& p) {
  json j;
  switch (p.kind()) {
    case Potential::Kind::Zero:
      j["kind"] = "zero";
      return j;
    case Potential::Kind::Barrier: {
      const auto* b = p.barrier_params();
      j["kind"] = "barrier";
      j["height"] = complex_to_json(b->height);
      j["length"] = b->length;
      return j;
    }
    case Potential::Kind::ModulatedExponential: {
      const auto* m = p.modexp_params();
      j["kind"] = "modulated_exponential";
      j["height"] = complex_to_json(m->height);
      j["k0"] = m->modulation_k;
      j["length"] = m->length;
      return j;
    }
    case Potential::Kind::Sampled: {
      const auto* s = p.sampled_params();
      j["kind"] = "sampled";
      j["x"] = s->x;
      json re = json::array(), im = json::array();
      for (const Cx& v : s->v) {
        re.push_back(v.real());
        im.push_back(v.imag());
      }
      j["v_re"] = std::move(re);
      j["v_im"] = std::move(im);
      return j;
    }
    default:
      throw ConfigError("potential_to_json: kind is not serializable");
  }
}

Potential potential_from_spec_string(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("potential spec: invalid JSON");
    return potential_from_json(j);
  }
  std::ifstream in(text);
  if (!in) throw ConfigError("potential spec: cannot open file '" + text + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ConfigError("potential spec: invalid JSON in '" + text + "'");
  return potential_from_json(j);
}

json amplitudes_to_json(const ScatteringAmplitudes& amps,
                        const SpectralFlags& flags) {
  json j;
  j["k"] = amps.k;
  j["left_reflection"] = complex_to_json(amps.left_reflection);
  j["right_reflection"] = complex_to_json(amps.right_reflection);
  j["transmission"] = complex_to_json(amps.transmission);
  j["route"] = route_name(amps.route);
  j["route_deviation"] = amps.route_deviation;
  j["flags"] = {
      {"spectral_singularity", flags.spectral_singularity},
      {"cpa", flags.cpa},
      {"right_reflectionless", flags.right_reflectionless},
      {"left_reflectionless", flags.left_reflectionless},
      {"right_invisible", flags.right_invisible},
      {"left_invisible", flags.left_invisible},
      {"bidirectional_invisible", flags.bidirectional_invisible},
  };
  j["residuals"] = {
      {"inv_transmission", flags.inv_transmission_residual},
      {"cpa", flags.cpa_residual},
      {"right_reflection", flags.right_reflection_residual},
      {"left_reflection", flags.left_reflection_residual},
      {"unit_transmission", flags.unit_transmission_residual},
  };
  return j;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "k,re_T,im_T,abs_T,re_Rl,im_Rl,abs_Rl,re_Rr,im_Rr,abs_Rr,"
        "route_deviation\n";
  for (const SweepRow& row : rows) {
    os << format_full(row.k);
    if (row.amps) {
      const Cx t = row.amps->transmission;
      const Cx rl = row.amps->left_reflection;
      const Cx rr = row.amps->right_reflection;
      for (const Cx& v : {t, rl, rr})
        os << ',' << format_full(v.real()) << ',' << format_full(v.imag())
           << ',' << format_full(std::abs(v));
      os << ',' << format_full(row.route_deviation);
    } else {
      for (int i = 0; i < 10; ++i) os << ",nan";
    }
    os << '\n';
  }
}

void write_design_sweep_csv(std::ostream& os,
                            const std::vector<DesignSweepRow>& rows) {
  os << "k0L,re_T_minus_1,im_T_minus_1,abs_T_minus_1,re_Rl,im_Rl,abs_Rl\n";
  for (const DesignSweepRow& row : rows) {
    const Cx tm1 = row.transmission - 1.0;
    os << format_full(row.k0L) << ',' << format_full(tm1.real()) << ','
       << format_full(tm1.imag()) << ',' << format_full(std::abs(tm1)) << ','
       << format_full(row.left_reflection.real()) << ','
       << format_full(row.left_reflection.imag()) << ','
       << format_full(std::abs(row.left_reflection)) << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const TransferTrajectory& traj,
                          int samples) {
  os << "alpha,re_m11,im_m11,re_m12,im_m12,re_m21,im_m21,re_m22,im_m22,"
        "det_defect\n";
  std::vector<double> alphas;
  if (samples > 1) {
    const double a0 = traj.alpha_begin(), a1 = traj.alpha_end();
    for (int i = 0; i < samples; ++i)
      alphas.push_back(a0 + (a1 - a0) * double(i) / double(samples - 1));
  } else {
    alphas = traj.ode().dimension() ? traj.ode().step_times()
                                    : std::vector<double>{traj.alpha_begin()};
  }
  for (double alpha : alphas) {
    const Complex2x2 m = traj.at(alpha);
    os << format_full(alpha);
    for (const Cx& v : {m.m11, m.m12, m.m21, m.m22})
      os << ',' << format_full(v.real()) << ',' << format_full(v.imag());
    os << ',' << format_full(std::abs(m.det() - 1.0)) << '\n';
  }
}

void write_profile_csv(std::ostream& os, const IndexProfileRecord& rec) {
  os << "x,k0x,re_n2_minus_1,im_n2\n";
  for (std::size_t i = 0; i < rec.x.size(); ++i) {
    os << format_full(rec.x[i]) << ',' << format_full(rec.k0 * rec.x[i])
       << ',' << format_full(rec.n_squared[i].real() - 1.0) << ','
       << format_full(rec.n_squared[i].imag()) << '\n';
  }
}

json design_to_json(const DesignResult& result,
                    const IndexProfileRecord& profile,
                    const json& verification) {
  json j;
  j["goal"] = goal_name(result.spec.goal);
  j["k0"] = result.spec.k0;
  j["L"] = result.spec.length;
  j["k0L"] = result.spec.k0L();
  j["gamma"] = complex_to_json(result.spec.gamma);
  j["z_end"] = complex_to_json(result.spec.z_end());
  json coeffs = json::array();
  for (const Cx& c : result.s.c) coeffs.push_back(complex_to_json(c));
  j["s_coefficients"] = std::move(coeffs);

  json predicted;
  if (result.predicted_transmission)
    predicted["transmission"] = complex_to_json(*result.predicted_transmission);
  if (result.predicted_right_reflection)
    predicted["right_reflection"] =
        complex_to_json(*result.predicted_right_reflection);
  if (result.spec.goal == DesignGoal::Lasing)
    predicted["inv_transmission"] = complex_to_json(Cx{0.0});
  if (result.spec.goal == DesignGoal::Cpa)
    predicted["m11"] = complex_to_json(Cx{0.0});
  j["predicted"] = std::move(predicted);

  json prof;
  prof["x"] = profile.x;
  json re = json::array(), im = json::array();
  for (const Cx& v : profile.n_squared) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  prof["n2_re"] = std::move(re);
  prof["n2_im"] = std::move(im);
  j["profile"] = std::move(prof);
  j["verification"] = verification;
  return j;
}

}  // namespace scatter1d
