#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scatter1d/amplitudes.hpp"
#include "scatter1d/design.hpp"
#include "scatter1d/errors.hpp"
#include "scatter1d/evolution.hpp"
#include "scatter1d/io.hpp"
#include "scatter1d/jost.hpp"
#include "scatter1d/reference.hpp"
#include "scatter1d/verify.hpp"

namespace py = pybind11;
using namespace scatter1d;

namespace {

Route route_from_string(const std::string& name) {
  if (name == "evolution") return Route::Evolution;
  if (name == "jost") return Route::Jost;
  if (name == "s") return Route::SForm;
  if (name == "auto") return Route::Auto;
  throw std::invalid_argument("route must be evolution|jost|s|auto");
}

DesignGoal goal_from_string(const std::string& name) {
  if (name == "lasing") return DesignGoal::Lasing;
  if (name == "cpa") return DesignGoal::Cpa;
  if (name == "uinv") return DesignGoal::RightInvisible;
  throw std::invalid_argument("goal must be lasing|cpa|uinv");
}

py::dict flags_to_dict(const SpectralFlags& f) {
  py::dict d;
  d["spectral_singularity"] = f.spectral_singularity;
  d["cpa"] = f.cpa;
  d["right_reflectionless"] = f.right_reflectionless;
  d["left_reflectionless"] = f.left_reflectionless;
  d["right_invisible"] = f.right_invisible;
  d["left_invisible"] = f.left_invisible;
  d["bidirectional_invisible"] = f.bidirectional_invisible;
  d["residuals"] = py::dict(
      py::arg("inv_transmission") = f.inv_transmission_residual,
      py::arg("cpa") = f.cpa_residual,
      py::arg("right_reflection") = f.right_reflection_residual,
      py::arg("left_reflection") = f.left_reflection_residual,
      py::arg("unit_transmission") = f.unit_transmission_residual);
  return d;
}

IntegratorConfig make_config(double rel_tol, double abs_tol) {
  IntegratorConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.abs_tol = abs_tol;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "transfer-matrix scattering of finite-range 1-D potentials and "
            "inverse design of optical profiles";

  py::register_exception<SolverError>(m, "SolverError");
  py::register_exception<SpectralSingularityError>(m, "SpectralSingularity");
  py::register_exception<SingularProfile>(m, "SingularProfileError");

  py::enum_<Route>(m, "Route")
      .value("evolution", Route::Evolution)
      .value("jost", Route::Jost)
      .value("s_form", Route::SForm)
      .value("auto_check", Route::Auto);

  py::class_<Complex2x2>(m, "Complex2x2")
      .def(py::init<Cx, Cx, Cx, Cx>(), py::arg("m11"), py::arg("m12"),
           py::arg("m21"), py::arg("m22"))
      .def_readonly("m11", &Complex2x2::m11)
      .def_readonly("m12", &Complex2x2::m12)
      .def_readonly("m21", &Complex2x2::m21)
      .def_readonly("m22", &Complex2x2::m22)
      .def("det", &Complex2x2::det)
      .def("__matmul__", &Complex2x2::operator*)
      .def("as_list", [](const Complex2x2& me) {
        return std::vector<std::vector<Cx>>{{me.m11, me.m12},
                                            {me.m21, me.m22}};
      })
      .def("__repr__", [](const Complex2x2& me) {
        std::ostringstream os;
        os << "Complex2x2([[" << me.m11 << ", " << me.m12 << "], ["
           << me.m21 << ", " << me.m22 << "]])";
        return os.str();
      });

  py::class_<Interval>(m, "Interval")
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi);

  py::class_<Potential>(m, "Potential")
      .def_static("zero", &Potential::zero)
      .def_static("barrier", &Potential::barrier, py::arg("height"),
                  py::arg("length"))
      .def_static("modulated_exponential", &Potential::modulated_exponential,
                  py::arg("height"), py::arg("k0"), py::arg("length"))
      .def_static(
          "from_index",
          [](std::function<Cx(double)> n2, double k0, double lo, double hi) {
            return Potential::from_index(std::move(n2), k0, Interval{lo, hi});
          },
          py::arg("n_squared"), py::arg("reference_k"), py::arg("lo"),
          py::arg("hi"))
      .def_static("sampled", &Potential::sampled, py::arg("x"), py::arg("v"))
      .def("__call__", &Potential::operator(), py::arg("x"), py::arg("k"))
      .def_property_readonly("support", &Potential::support)
      .def("truncated", &Potential::truncated, py::arg("a"))
      .def("upper_remainder", &Potential::upper_remainder, py::arg("a"))
      .def("parity_reflected", &Potential::parity_reflected);

  py::class_<ScatteringAmplitudes>(m, "ScatteringAmplitudes")
      .def_readonly("k", &ScatteringAmplitudes::k)
      .def_readonly("left_reflection", &ScatteringAmplitudes::left_reflection)
      .def_readonly("right_reflection",
                    &ScatteringAmplitudes::right_reflection)
      .def_readonly("transmission", &ScatteringAmplitudes::transmission)
      .def_readonly("route_deviation", &ScatteringAmplitudes::route_deviation)
      .def_property_readonly(
          "route",
          [](const ScatteringAmplitudes& a) { return route_name(a.route); })
      .def("__repr__", [](const ScatteringAmplitudes& a) {
        std::ostringstream os;
        os << "ScatteringAmplitudes(k=" << a.k << ", Rl=" << a.left_reflection
           << ", Rr=" << a.right_reflection << ", T=" << a.transmission
           << ")";
        return os.str();
      });

  m.def(
      "scatter",
      [](const Potential& p, double k, const std::string& route,
         double rel_tol, double abs_tol) {
        return scatter(p, k, route_from_string(route),
                       make_config(rel_tol, abs_tol));
      },
      py::arg("potential"), py::arg("k"), py::arg("route") = "auto",
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-12);

  m.def(
      "classify",
      [](const ScatteringAmplitudes& amps, double tolerance) {
        return flags_to_dict(classify(amps, ClassifyThresholds{tolerance}));
      },
      py::arg("amplitudes"), py::arg("tolerance") = 1e-6);

  m.def(
      "classify_matrix",
      [](const Complex2x2& mm, double tolerance) {
        return flags_to_dict(classify_matrix(mm, ClassifyThresholds{tolerance}));
      },
      py::arg("matrix"), py::arg("tolerance") = 1e-6);

  m.def("amplitudes_from_matrix", &amplitudes_from_matrix, py::arg("matrix"),
        py::arg("k"), py::arg("route") = Route::Evolution);
  m.def("matrix_from_amplitudes", &matrix_from_amplitudes,
        py::arg("amplitudes"));

  py::class_<TransferTrajectory>(m, "TransferTrajectory")
      .def_property_readonly("k", &TransferTrajectory::k)
      .def_property_readonly("alpha_begin", &TransferTrajectory::alpha_begin)
      .def_property_readonly("alpha_end", &TransferTrajectory::alpha_end)
      .def("at", &TransferTrajectory::at, py::arg("alpha"))
      .def("final_matrix", &TransferTrajectory::final_matrix)
      .def("max_det_defect", &TransferTrajectory::max_det_defect);

  m.def(
      "evolve_transfer",
      [](const Potential& p, double k, double rel_tol, double abs_tol) {
        return evolve_transfer(p, k, make_config(rel_tol, abs_tol));
      },
      py::arg("potential"), py::arg("k"), py::arg("rel_tol") = 1e-10,
      py::arg("abs_tol") = 1e-12);

  m.def(
      "composition_defect",
      [](const Potential& p, double k, double split, double rel_tol,
         double abs_tol) {
        return composition_defect(p, k, split, make_config(rel_tol, abs_tol));
      },
      py::arg("potential"), py::arg("k"), py::arg("split"),
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-12);

  py::class_<JostSolution>(m, "JostSolution")
      .def_property_readonly("k", &JostSolution::k)
      .def("psi", &JostSolution::psi, py::arg("x"))
      .def("dpsi", &JostSolution::dpsi, py::arg("x"))
      .def("f_plus", &JostSolution::f_plus, py::arg("x"))
      .def("f_minus", &JostSolution::f_minus, py::arg("x"));

  m.def(
      "solve_jost",
      [](const Potential& p, double k, double rel_tol, double abs_tol) {
        return solve_jost(p, k, make_config(rel_tol, abs_tol));
      },
      py::arg("potential"), py::arg("k"), py::arg("rel_tol") = 1e-10,
      py::arg("abs_tol") = 1e-12);

  m.def(
      "truncated_amplitudes",
      [](const JostSolution& j, const Potential& p, double a, double rel_tol,
         double abs_tol) {
        return amplitudes_from_jost(j, p, a, make_config(rel_tol, abs_tol));
      },
      py::arg("jost"), py::arg("potential"), py::arg("a"),
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-12);

  py::class_<BarrierClosedForm>(m, "BarrierClosedForm")
      .def(py::init([](Cx height, double k, double length) {
             return BarrierClosedForm{height, k, length};
           }),
           py::arg("height"), py::arg("k"), py::arg("length"))
      .def("transfer_at", &BarrierClosedForm::transfer_at, py::arg("alpha"))
      .def("full_transfer", &BarrierClosedForm::full_transfer);

  py::class_<ExpPotentialClosedForm>(m, "ExpPotentialClosedForm")
      .def(py::init([](Cx height, double k0, double length) {
             return ExpPotentialClosedForm{height, k0, length};
           }),
           py::arg("height"), py::arg("k0"), py::arg("length"))
      .def("amplitudes", [](const ExpPotentialClosedForm& p) {
        const auto a = p.amplitudes();
        return py::make_tuple(a.left_reflection, a.right_reflection,
                              a.transmission);
      });

  py::class_<DesignResult>(m, "DesignResult")
      .def_property_readonly(
          "goal",
          [](const DesignResult& d) { return goal_name(d.spec.goal); })
      .def_property_readonly(
          "k0", [](const DesignResult& d) { return d.spec.k0; })
      .def_property_readonly(
          "length", [](const DesignResult& d) { return d.spec.length; })
      .def_property_readonly(
          "gamma", [](const DesignResult& d) { return d.spec.gamma; })
      .def_property_readonly("potential",
                             [](const DesignResult& d) { return d.potential; })
      .def_property_readonly(
          "predicted_transmission",
          [](const DesignResult& d) { return d.predicted_transmission; })
      .def_property_readonly(
          "predicted_right_reflection",
          [](const DesignResult& d) { return d.predicted_right_reflection; })
      .def("n_squared",
           [](const DesignResult& d, double x) { return d.n_squared(x); },
           py::arg("x"))
      .def(
          "sample_profile",
          [](const DesignResult& d, int n) {
            const IndexProfileRecord rec = sample_index_profile(d, n);
            return py::make_tuple(rec.x, rec.n_squared);
          },
          py::arg("n_points") = 512);

  m.def(
      "design",
      [](const std::string& goal, double k0, double length, Cx gamma) {
        DesignSpec spec;
        spec.goal = goal_from_string(goal);
        spec.k0 = k0;
        spec.length = length;
        spec.gamma = gamma;
        return make_design(spec);
      },
      py::arg("goal"), py::arg("k0"), py::arg("length"),
      py::arg("gamma") = Cx{1e-6, 0.0});

  m.def(
      "predicted_transmission",
      [](double k0, double length, Cx gamma) {
        DesignSpec spec;
        spec.goal = DesignGoal::RightInvisible;
        spec.k0 = k0;
        spec.length = length;
        spec.gamma = gamma;
        return predicted_transmission(spec);
      },
      py::arg("k0"), py::arg("length"), py::arg("gamma") = Cx{1e-6, 0.0});

  m.def(
      "left_reflection_contour",
      [](int windings, Cx gamma, double rel_tol, double abs_tol) {
        DesignSpec spec;
        spec.goal = DesignGoal::RightInvisible;
        spec.gamma = gamma;
        return left_reflection_contour(spec, windings,
                                       make_config(rel_tol, abs_tol));
      },
      py::arg("windings"), py::arg("gamma") = Cx{1e-6, 0.0},
      py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-12);

  m.def(
      "run_verification",
      [](double tolerance_scale, double rel_tol, double abs_tol) {
        const VerificationReport report = run_verification(
            make_config(rel_tol, abs_tol), tolerance_scale);
        py::list checks;
        for (const CheckResult& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["residual"] = c.residual;
          d["threshold"] = c.threshold;
          d["detail"] = c.detail;
          checks.append(std::move(d));
        }
        return checks;
      },
      py::arg("tolerance_scale") = 1.0, py::arg("rel_tol") = 1e-10,
      py::arg("abs_tol") = 1e-12);

#ifdef VERSION_INFO
#define STR2(x) #x
#define STR(x) STR2(x)
  m.attr("__version__") = STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
