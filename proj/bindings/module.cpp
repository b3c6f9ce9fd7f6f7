#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "hypexc/basis.hpp"
#include "hypexc/elements.hpp"
#include "hypexc/observables.hpp"
#include "hypexc/oracle.hpp"
#include "hypexc/solver.hpp"

namespace py = pybind11;
using namespace hypexc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bound states of the uniaxial anisotropic exciton in the "
            "hyperspherical (Fock) basis";

  // basis ---------------------------------------------------------------
  py::enum_<Parity>(m, "Parity")
      .value("even", Parity::even)
      .value("odd", Parity::odd);

  py::class_<QuantumNumbers>(m, "QuantumNumbers")
      .def(py::init([](int n, int l, int mm) { return QuantumNumbers{n, l, mm}; }),
           py::arg("n"), py::arg("l"), py::arg("m"))
      .def_readonly("n", &QuantumNumbers::n)
      .def_readonly("l", &QuantumNumbers::l)
      .def_readonly("m", &QuantumNumbers::m)
      .def("__repr__", [](const QuantumNumbers& q) {
        return "QuantumNumbers(n=" + std::to_string(q.n) + ", l=" +
               std::to_string(q.l) + ", m=" + std::to_string(q.m) + ")";
      });
  m.def("is_valid", &is_valid, py::arg("qn"));

  py::class_<Sector>(m, "Sector")
      .def(py::init([](int m_abs, Parity p) { return Sector{m_abs, p}; }),
           py::arg("m_abs"), py::arg("parity"))
      .def_readonly("m_abs", &Sector::m_abs)
      .def_readonly("parity", &Sector::parity)
      .def("multiplicity", &Sector::multiplicity);

  py::class_<SectorBasis>(m, "SectorBasis")
      .def_property_readonly("sector", &SectorBasis::sector)
      .def_property_readonly("n_max", &SectorBasis::n_max)
      .def_property_readonly("l_max", &SectorBasis::l_max)
      .def_property_readonly("states", &SectorBasis::states)
      .def("__len__", &SectorBasis::size)
      .def("index_of", &SectorBasis::index_of, py::arg("qn"));

  m.def("sector_states", &sector_states, py::arg("sector"), py::arg("n_max"),
        py::arg("l_max"));
  m.def("state_index", &state_index, py::arg("basis"), py::arg("qn"));

  py::class_<EffectiveUnits>(m, "EffectiveUnits")
      .def_readonly("gamma", &EffectiveUnits::gamma)
      .def_readonly("rydberg", &EffectiveUnits::rydberg)
      .def_readonly("bohr_radius", &EffectiveUnits::bohr_radius);
  m.def("gamma_from_materials", &gamma_from_materials, py::arg("mu_perp"),
        py::arg("mu_par"), py::arg("eps_perp"), py::arg("eps_par"));

  // elements ------------------------------------------------------------
  py::enum_<elements::PerturbationAxis>(m, "PerturbationAxis")
      .value("z_axis", elements::PerturbationAxis::z_axis)
      .value("xy_plane", elements::PerturbationAxis::xy_plane);

  m.def("q_angular", &elements::q_angular, py::arg("l"), py::arg("m"));
  m.def("v_same_l", &elements::v_same_l, py::arg("n"), py::arg("n2"),
        py::arg("l"), py::arg("m"));
  m.def("v_lower_l", &elements::v_lower_l, py::arg("n"), py::arg("n2"),
        py::arg("l"), py::arg("m"));
  m.def("t_hyper", &elements::t_hyper, py::arg("n"), py::arg("n2"), py::arg("l"));
  m.def("v_element", &elements::v_element, py::arg("s"), py::arg("s2"));

  py::class_<elements::HamiltonianMatrix>(m, "HamiltonianMatrix")
      .def_readonly("sector", &elements::HamiltonianMatrix::sector)
      .def_readonly("epsilon", &elements::HamiltonianMatrix::epsilon)
      .def_readonly("mode", &elements::HamiltonianMatrix::mode)
      .def_readonly("entries", &elements::HamiltonianMatrix::entries);
  m.def("assemble", &elements::assemble, py::arg("basis"), py::arg("epsilon"),
        py::arg("mode") = elements::PerturbationAxis::z_axis);

  // oracle --------------------------------------------------------------
  m.def("gegenbauer", &oracle::gegenbauer, py::arg("k"), py::arg("nu"), py::arg("x"));
  m.def("assoc_legendre", &oracle::assoc_legendre, py::arg("l"), py::arg("m"),
        py::arg("x"));
  m.def("angular_integral_J", &oracle::angular_integral_J, py::arg("l"),
        py::arg("l2"), py::arg("m"), py::arg("order") = 0);
  m.def("hyper_integral_I", &oracle::hyper_integral_I, py::arg("n"), py::arg("n2"),
        py::arg("l"), py::arg("l2"), py::arg("order") = 0);
  m.def("v_element_oracle", &oracle::v_element_oracle, py::arg("s"), py::arg("s2"),
        py::arg("order") = 0);

  py::class_<oracle::VerifyReport>(m, "VerifyReport")
      .def_readonly("n_max", &oracle::VerifyReport::n_max)
      .def_readonly("l_max", &oracle::VerifyReport::l_max)
      .def_readonly("tol", &oracle::VerifyReport::tol)
      .def_readonly("element_count", &oracle::VerifyReport::element_count)
      .def_readonly("max_dev", &oracle::VerifyReport::max_dev)
      .def_readonly("norm_max_dev", &oracle::VerifyReport::norm_max_dev)
      .def_readonly("footnote_max_dev", &oracle::VerifyReport::footnote_max_dev)
      .def_property_readonly("failure_count",
                             [](const oracle::VerifyReport& r) { return r.failures.size(); })
      .def("passed", &oracle::VerifyReport::passed);
  m.def("verify_closed_forms", &oracle::verify_closed_forms, py::arg("n_max"),
        py::arg("l_max"), py::arg("tol"), py::arg("inject_dev") = 0.0);

  // solver --------------------------------------------------------------
  py::class_<SpectrumResult>(m, "SpectrumResult")
      .def_readonly("sector", &SpectrumResult::sector)
      .def_readonly("gamma", &SpectrumResult::gamma)
      .def_readonly("basis", &SpectrumResult::basis)
      .def_readonly("lambdas", &SpectrumResult::lambdas)
      .def_readonly("energies", &SpectrumResult::energies)
      .def_readonly("coefficients", &SpectrumResult::coefficients)
      .def_readonly("s_norms", &SpectrumResult::s_norms)
      .def_readonly("oscillator_strengths", &SpectrumResult::oscillator_strengths)
      .def_readonly("labels", &SpectrumResult::labels)
      .def_readonly("n_max_used", &SpectrumResult::n_max_used)
      .def_readonly("l_max_used", &SpectrumResult::l_max_used)
      .def_readonly("converged", &SpectrumResult::converged)
      .def_readonly("dropped_nonpositive", &SpectrumResult::dropped_nonpositive)
      .def("__len__", &SpectrumResult::size);

  py::class_<ElongatedReduction>(m, "ElongatedReduction")
      .def_readonly("epsilon_tilde", &ElongatedReduction::epsilon_tilde)
      .def_readonly("energy_scale", &ElongatedReduction::energy_scale);
  m.def("reduce_elongated", &reduce_elongated, py::arg("gamma"));
  m.def("spectroscopic_label", &spectroscopic_label, py::arg("n"), py::arg("l"),
        py::arg("m_abs"));

  m.def("solve_sector", &solve_sector, py::arg("sector"), py::arg("gamma"),
        py::arg("n_max"), py::arg("l_max"), py::arg("k_states") = 10);

  py::class_<ConvergeOptions>(m, "ConvergeOptions")
      .def(py::init<>())
      .def_readwrite("l_max_cap", &ConvergeOptions::l_max_cap)
      .def_readwrite("schedule", &ConvergeOptions::schedule);
  m.def("solve_converged", &solve_converged, py::arg("sector"), py::arg("gamma"),
        py::arg("rel_tol") = 1e-4, py::arg("k_states") = 10,
        py::arg("options") = ConvergeOptions{});

  py::class_<LevelTrajectory>(m, "LevelTrajectory")
      .def_readonly("label", &LevelTrajectory::label)
      .def_readonly("gammas", &LevelTrajectory::gammas)
      .def_readonly("lambdas", &LevelTrajectory::lambdas)
      .def_readonly("energies", &LevelTrajectory::energies)
      .def_readonly("oscillator_strengths", &LevelTrajectory::oscillator_strengths);
  py::class_<ContinuityDefect>(m, "ContinuityDefect")
      .def_readonly("grid_step", &ContinuityDefect::grid_step)
      .def_readonly("state", &ContinuityDefect::state)
      .def_readonly("matched_state", &ContinuityDefect::matched_state)
      .def_readonly("overlap", &ContinuityDefect::overlap);
  py::class_<ContinuityReport>(m, "ContinuityReport")
      .def_readonly("min_overlap", &ContinuityReport::min_overlap)
      .def_readonly("order_preserved", &ContinuityReport::order_preserved)
      .def_readonly("defects", &ContinuityReport::defects);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("gamma_grid", &SweepResult::gamma_grid)
      .def_readonly("points", &SweepResult::points)
      .def_readonly("trajectories", &SweepResult::trajectories)
      .def_readonly("continuity", &SweepResult::continuity);
  m.def("track_levels", &track_levels, py::arg("sweep"));

  // observables ----------------------------------------------------------
  m.def("normalization_S", &observables::normalization_S, py::arg("basis"),
        py::arg("coeffs"));
  m.def("oscillator_strength", &observables::oscillator_strength, py::arg("result"),
        py::arg("nu"));
  m.def(
      "wavefunction",
      [](const SpectrumResult& r, int nu, double x, double y, double z) {
        return observables::wavefunction(r, nu, {x, y, z});
      },
      py::arg("result"), py::arg("nu"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("spherical_energy", &observables::spherical_energy, py::arg("n"),
        py::arg("l"), py::arg("m"), py::arg("epsilon"));
  m.def("spherical_oscillator", &observables::spherical_oscillator, py::arg("n"),
        py::arg("epsilon"));

  py::enum_<observables::AnalyticLevel>(m, "AnalyticLevel")
      .value("level_1S", observables::AnalyticLevel::level_1S)
      .value("level_2S", observables::AnalyticLevel::level_2S)
      .value("level_2P0", observables::AnalyticLevel::level_2P0)
      .value("level_2Ppm", observables::AnalyticLevel::level_2Ppm);
  m.def("second_order_energy",
        [](const std::string& name, double eps) {
          return observables::second_order_energy(
              observables::analytic_level_from_string(name), eps);
        },
        py::arg("level"), py::arg("epsilon"));
  m.def("ground_state_pade", &observables::ground_state_pade, py::arg("gamma"));
  m.def("anisotropy_measure", &observables::anisotropy_measure, py::arg("e_1s"),
        py::arg("e_2s"));
}
