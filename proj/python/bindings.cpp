#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magsym/dynamics.hpp"
#include "magsym/flows.hpp"
#include "magsym/generators.hpp"
#include "magsym/observables.hpp"
#include "magsym/qgrid.hpp"
#include "magsym/scenario.hpp"
#include "magsym/serialize.hpp"
#include "magsym/weyl.hpp"

namespace py = pybind11;
using namespace magsym;

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

PolyObservable poly_from_terms(const std::vector<std::pair<std::string, std::array<int, 6>>>& terms) {
  PolyObservable p;
  for (const auto& [c, e] : terms) p.add_term(e, rat(c));
  return p;
}

Poly3 poly3_from_terms(const std::vector<std::pair<std::string, std::array<int, 3>>>& terms) {
  Poly3 p;
  for (const auto& [c, e] : terms) p.add_term(e, rat(c));
  return p;
}

PhysicalConstants make_constants(const std::string& e, const std::string& c, const std::string& m,
                                 const std::string& hbar) {
  return PhysicalConstants(rat(e), rat(c), rat(m), rat(hbar));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Generator algebra and magnetic translation checks for charged particles";

  py::class_<Vec3>(mod, "Vec3")
      .def(py::init<double, double, double>())
      .def_readonly("x1", &Vec3::x1)
      .def_readonly("x2", &Vec3::x2)
      .def_readonly("x3", &Vec3::x3)
      .def("__getitem__", [](const Vec3& v, int i) { return v[i]; })
      .def("__repr__", [](const Vec3& v) {
        return "Vec3(" + std::to_string(v.x1) + ", " + std::to_string(v.x2) + ", " +
               std::to_string(v.x3) + ")";
      });

  py::class_<PhasePoint>(mod, "PhasePoint")
      .def(py::init<Vec3, Vec3>(), py::arg("x") = Vec3{}, py::arg("p") = Vec3{})
      .def_readonly("x", &PhasePoint::x)
      .def_readonly("p", &PhasePoint::p);

  py::class_<PhysicalConstants>(mod, "PhysicalConstants")
      .def(py::init(&make_constants), py::arg("e") = "1", py::arg("c") = "1", py::arg("m") = "1",
           py::arg("hbar") = "1")
      .def_property_readonly("e", [](const PhysicalConstants& k) { return to_string(k.e); })
      .def_property_readonly("c", [](const PhysicalConstants& k) { return to_string(k.c); })
      .def_property_readonly("m", [](const PhysicalConstants& k) { return to_string(k.m); })
      .def_property_readonly("hbar", [](const PhysicalConstants& k) { return to_string(k.hbar); });

  py::class_<Poly3>(mod, "Poly3")
      .def(py::init(&poly3_from_terms), py::arg("terms"))
      .def("__str__", [](const Poly3& p) { return p.str(kPositionNames); })
      .def("__eq__", [](const Poly3& a, const Poly3& b) { return a == b; })
      .def("is_zero", &Poly3::is_zero);

  py::class_<PolyObservable>(mod, "PolyObservable")
      .def(py::init(&poly_from_terms), py::arg("terms"))
      .def("__str__", [](const PolyObservable& p) { return p.str(kPhaseSpaceNames); })
      .def("__eq__", [](const PolyObservable& a, const PolyObservable& b) { return a == b; })
      .def("__add__", [](const PolyObservable& a, const PolyObservable& b) { return a + b; })
      .def("__sub__", [](const PolyObservable& a, const PolyObservable& b) { return a - b; })
      .def("__mul__", [](const PolyObservable& a, const PolyObservable& b) { return a * b; })
      .def("scaled", [](const PolyObservable& a, const std::string& s) { return rat(s) * a; })
      .def("degree", &PolyObservable::degree)
      .def("is_zero", &PolyObservable::is_zero)
      .def("eval",
           [](const PolyObservable& p, const PhasePoint& z) { return p.eval(z.to_array()); });

  mod.def("x", [](int i) { return obs::x(i - 1); }, "position observable x_i (1-based)");
  mod.def("p", [](int i) { return obs::p(i - 1); }, "canonical momentum observable p_i (1-based)");
  mod.def("poisson", &poisson, "exact Poisson bracket of polynomial observables");

  py::class_<GaugePotential>(mod, "GaugePotential")
      .def_property_readonly("label", [](const GaugePotential& A) { return A.label; })
      .def_property_readonly("is_polynomial", &GaugePotential::is_polynomial)
      .def("evaluate", &GaugePotential::evaluate);

  py::class_<MagneticField>(mod, "MagneticField")
      .def_property_readonly("is_polynomial", &MagneticField::is_polynomial)
      .def("evaluate", &MagneticField::evaluate);

  mod.def("symmetric_gauge",
          [](const std::array<std::string, 3>& B) {
            return symmetric_gauge({rat(B[0]), rat(B[1]), rat(B[2])});
          },
          "A = B x r / 2 for a uniform field given as three rationals");
  mod.def("landau_gauge",
          [](const std::string& B, int axis) { return landau_gauge(rat(B), axis); },
          py::arg("B"), py::arg("axis") = 3);
  mod.def("gradient_gauge", [](const std::string& B0, const std::string& beta) {
    return gradient_gauge(rat(B0), rat(beta));
  });
  mod.def("dipole_potential", &dipole_potential);
  mod.def("curl", &curl);
  mod.def("gauge_transform", &gauge_transform);

  py::class_<NonIntegrableReport>(mod, "NonIntegrableReport")
      .def_property_readonly("kind", [](const NonIntegrableReport& r) { return r.kind; })
      .def_property_readonly("axis", [](const NonIntegrableReport& r) { return r.axis; })
      .def("summary", &NonIntegrableReport::summary);

  py::class_<GeneratorResult>(mod, "GeneratorResult")
      .def("exists", &GeneratorResult::exists)
      .def("value", &GeneratorResult::value)
      .def("report", &GeneratorResult::report);

  mod.def("passive_translation_generator",
          [](const GaugePotential& A, int k, const PhysicalConstants& consts) {
            return passive_translation_generator(A, k, consts);
          },
          py::arg("A"), py::arg("axis"), py::arg("consts"));
  mod.def("active_translation_generator", &active_translation_generator, py::arg("A"),
          py::arg("axis"), py::arg("consts"));
  mod.def("passive_rotation_generator",
          [](const GaugePotential& A, int k, const PhysicalConstants& consts) {
            return passive_rotation_generator(A, k, consts);
          },
          py::arg("A"), py::arg("axis"), py::arg("consts"));
  mod.def("substitute_kinematical", &substitute_kinematical);
  mod.def("hamiltonian_observable", &hamiltonian_observable);

  py::class_<WeylOp>(mod, "WeylOp")
      .def_static("position", &WeylOp::position, py::arg("i"), py::arg("power") = 1)
      .def_static("momentum", &WeylOp::momentum, py::arg("i"), py::arg("power") = 1)
      .def_static("from_poly", &WeylOp::from_poly)
      .def("__str__", &WeylOp::str)
      .def("__eq__", [](const WeylOp& a, const WeylOp& b) { return a == b; })
      .def("__add__", [](const WeylOp& a, const WeylOp& b) { return a + b; })
      .def("__sub__", [](const WeylOp& a, const WeylOp& b) { return a - b; })
      .def("is_zero", &WeylOp::is_zero)
      .def("is_scalar", &WeylOp::is_scalar);

  py::class_<WeylAlgebra>(mod, "WeylAlgebra")
      .def(py::init([](const std::string& hbar) { return WeylAlgebra(rat(hbar)); }),
           py::arg("hbar") = "1")
      .def("mul", &WeylAlgebra::mul)
      .def("commutator", &WeylAlgebra::commutator)
      .def("adjoint", &WeylAlgebra::adjoint)
      .def("is_hermitian", &WeylAlgebra::is_hermitian)
      .def("quantize", &WeylAlgebra::quantize);

  mod.def("verify_identities", [](const GaugePotential& A, const PhysicalConstants& consts) {
    IdentityReport rep = verify_identities(A, consts);
    py::list out;
    for (const auto& c : rep.checks) {
      py::dict d;
      d["name"] = c.name;
      d["anchor"] = c.anchor;
      d["pass"] = c.pass;
      d["residual"] = c.residual;
      out.append(d);
    }
    return out;
  });

  mod.def("flow",
          [](const PolyObservable& G, double s, const PhasePoint& start, double step) {
            return flow(G, s, start, step);
          },
          py::arg("G"), py::arg("s"), py::arg("start"), py::arg("step") = 0.0);
  mod.def("finite_passive_translation", &finite_passive_translation);
  mod.def("flow_commutator_gap",
          [](const PolyObservable& G1, const PolyObservable& G2, double s1, double s2,
             const PhasePoint& start) { return flow_commutator_gap(G1, G2, s1, s2, start); });

  py::class_<Trajectory>(mod, "Trajectory")
      .def_property_readonly("t", [](const Trajectory& tr) { return tr.t; })
      .def("state", [](const Trajectory& tr, size_t i) { return tr.states.at(i); })
      .def("__len__", [](const Trajectory& tr) { return tr.size(); });

  mod.def("hamiltonian", &hamiltonian);
  mod.def("integrate_trajectory", &integrate_trajectory, py::arg("start"), py::arg("A"),
          py::arg("consts"), py::arg("T"), py::arg("dt") = 0.0);
  mod.def("drift", [](const Trajectory& tr, const PolyObservable& o) { return drift(tr, o); });

  py::class_<qgrid::GridSpec>(mod, "GridSpec")
      .def(py::init([](int n, double h, std::array<double, 2> origin) {
             return qgrid::GridSpec{n, h, origin};
           }),
           py::arg("n"), py::arg("h"), py::arg("origin"))
      .def_readonly("n", &qgrid::GridSpec::n)
      .def_readonly("h", &qgrid::GridSpec::h);

  py::class_<qgrid::LatticeShift>(mod, "LatticeShift")
      .def(py::init([](int m1, int m2) { return qgrid::LatticeShift{m1, m2}; }))
      .def_readonly("m1", &qgrid::LatticeShift::m1)
      .def_readonly("m2", &qgrid::LatticeShift::m2);

  py::class_<qgrid::Wavefunction2D>(mod, "Wavefunction2D")
      .def("norm", &qgrid::Wavefunction2D::norm)
      .def("n", &qgrid::Wavefunction2D::n)
      .def("at", &qgrid::Wavefunction2D::at)
      .def("margin_peak_ratio", &qgrid::Wavefunction2D::margin_peak_ratio);

  py::class_<qgrid::ComposePhaseResult>(mod, "ComposePhaseResult")
      .def_readonly("phi", &qgrid::ComposePhaseResult::phi)
      .def_readonly("fidelity", &qgrid::ComposePhaseResult::fidelity)
      .def_readonly("comparable", &qgrid::ComposePhaseResult::comparable);

  py::enum_<qgrid::Family>(mod, "Family")
      .value("passive", qgrid::Family::passive)
      .value("active", qgrid::Family::active);

  mod.def("gaussian_packet", &qgrid::gaussian_packet, py::arg("spec"), py::arg("center"),
          py::arg("sigma"), py::arg("k0"), py::arg("margin_cells") = 0);
  mod.def("translate_passive", &qgrid::translate_passive);
  mod.def("translate_active", &qgrid::translate_active);
  mod.def("compose_phase", &qgrid::compose_phase);
  mod.def("apply_hamiltonian", &qgrid::apply_hamiltonian);
  mod.def("invariance_residual", &qgrid::invariance_residual, py::arg("psi"), py::arg("a"),
          py::arg("B"), py::arg("consts"), py::arg("which") = qgrid::Family::passive);
  mod.def("mean_position", &qgrid::mean_position);
  mod.def("mean_momentum", &qgrid::mean_momentum);
  mod.def("mean_kinematical_momentum", &qgrid::mean_kinematical_momentum);
  mod.def("mean_energy", &qgrid::mean_energy);

  mod.def("run_scenario_file",
          [](const std::string& path, const std::string& out, const std::string& export_dir,
             int jobs) {
            Scenario scenario = load_scenario(path);
            RunOptions options;
            if (!out.empty()) options.report_path = out;
            if (!export_dir.empty()) options.export_dir = export_dir;
            options.jobs = jobs;
            RunResult result = run_scenario(scenario, options);
            return py::make_tuple(result.exit_code, result.report.dump(2));
          },
          py::arg("path"), py::arg("out") = "", py::arg("export_dir") = "", py::arg("jobs") = 1);
  mod.def("list_checks", &format_check_listing);

  mod.attr("__version__") = MAGSYM_VERSION;
}
