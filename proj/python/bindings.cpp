#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pskrx/baselines.hpp"
#include "pskrx/core.hpp"
#include "pskrx/montecarlo.hpp"
#include "pskrx/optimizer.hpp"
#include "pskrx/sweep.hpp"

namespace py = pybind11;
using namespace pskrx;

PYBIND11_MODULE(_core, module) {
    module.doc() = "Exact and Monte Carlo analysis of PSK coherent-state receivers";

    py::class_<PskAlphabet>(module, "PskAlphabet")
        .def(py::init<int, double>(), py::arg("m"), py::arg("alpha"))
        .def(py::init<int, double, std::vector<double>>(), py::arg("m"), py::arg("alpha"),
             py::arg("priors"))
        .def_readwrite("m", &PskAlphabet::m)
        .def_readwrite("alpha", &PskAlphabet::alpha)
        .def_readwrite("priors", &PskAlphabet::priors)
        .def("amplitude", &PskAlphabet::amplitude, py::arg("k"))
        .def("prior", &PskAlphabet::prior, py::arg("k"))
        .def("mean_photons", &PskAlphabet::mean_photons)
        .def("validate", &PskAlphabet::validate);

    py::class_<ReceiverParams>(module, "ReceiverParams")
        .def(py::init<>())
        .def(py::init([](std::vector<double> u, std::vector<Amplitude> eps) {
                 ReceiverParams params;
                 params.u = std::move(u);
                 params.eps = std::move(eps);
                 return params;
             }),
             py::arg("u"), py::arg("eps"))
        .def_readwrite("u", &ReceiverParams::u)
        .def_readwrite("eps", &ReceiverParams::eps)
        .def("modes", &ReceiverParams::modes)
        .def("validate", &ReceiverParams::validate);

    py::class_<NoiseModel>(module, "NoiseModel")
        .def(py::init<>())
        .def(py::init([](double efficiency, double dark_prob, double visibility) {
                 NoiseModel noise;
                 noise.efficiency = efficiency;
                 noise.dark_prob = dark_prob;
                 noise.visibility = visibility;
                 return noise;
             }),
             py::arg("efficiency") = 1.0, py::arg("dark_prob") = 0.0,
             py::arg("visibility") = 1.0)
        .def_readwrite("efficiency", &NoiseModel::efficiency)
        .def_readwrite("dark_prob", &NoiseModel::dark_prob)
        .def_readwrite("visibility", &NoiseModel::visibility)
        .def_static("ideal", &NoiseModel::ideal)
        .def("validate", &NoiseModel::validate);

    py::class_<ClickPattern>(module, "ClickPattern")
        .def_static("from_mask", &ClickPattern::from_mask, py::arg("mask"), py::arg("n_modes"))
        .def_readwrite("bits", &ClickPattern::bits)
        .def("to_mask", &ClickPattern::to_mask);

    py::class_<DecodeEntry>(module, "DecodeEntry")
        .def_readonly("best_x", &DecodeEntry::best_x)
        .def_readonly("posterior", &DecodeEntry::posterior);

    py::class_<DecodeTable>(module, "DecodeTable")
        .def_readonly("n_modes", &DecodeTable::n_modes)
        .def_readonly("entries", &DecodeTable::entries);

    module.def("success_probability", &success_probability, py::arg("params"),
               py::arg("alphabet"), py::arg("noise") = NoiseModel::ideal());
    module.def("pattern_probability", &pattern_probability, py::arg("params"),
               py::arg("alphabet"), py::arg("noise"), py::arg("state"), py::arg("pattern"));
    module.def("ml_decode", &ml_decode, py::arg("params"), py::arg("alphabet"),
               py::arg("noise"), py::arg("pattern"));
    module.def("build_decode_table", &build_decode_table, py::arg("params"),
               py::arg("alphabet"), py::arg("noise") = NoiseModel::ideal());
    module.def("mean_photon_numbers", &mean_photon_numbers, py::arg("params"),
               py::arg("alpha_x"), py::arg("noise") = NoiseModel::ideal());

    py::class_<OptimizerSettings>(module, "OptimizerSettings")
        .def(py::init<>())
        .def_readwrite("starts", &OptimizerSettings::starts)
        .def_readwrite("seed", &OptimizerSettings::seed)
        .def_readwrite("max_iters", &OptimizerSettings::max_iters)
        .def_readwrite("x_tolerance", &OptimizerSettings::x_tolerance)
        .def_readwrite("f_tolerance", &OptimizerSettings::f_tolerance)
        .def_readwrite("warm_starts", &OptimizerSettings::warm_starts)
        .def("validate", &OptimizerSettings::validate);

    py::class_<OptimizationResult>(module, "OptimizationResult")
        .def_readonly("params", &OptimizationResult::params)
        .def_readonly("success", &OptimizationResult::success)
        .def_readonly("start_index", &OptimizationResult::start_index)
        .def_readonly("iterations", &OptimizationResult::iterations)
        .def_readonly("converged", &OptimizationResult::converged);

    module.def("optimize", &optimize, py::arg("alphabet"), py::arg("n_modes"),
               py::arg("noise") = NoiseModel::ideal(),
               py::arg("settings") = OptimizerSettings{});

    py::class_<TrialPlan>(module, "TrialPlan")
        .def(py::init<>())
        .def_readwrite("shots_per_run", &TrialPlan::shots_per_run)
        .def_readwrite("runs", &TrialPlan::runs)
        .def_readwrite("seed", &TrialPlan::seed)
        .def("total_shots", &TrialPlan::total_shots)
        .def("validate", &TrialPlan::validate);

    py::class_<TrialReport>(module, "TrialReport")
        .def_readonly("success_estimate", &TrialReport::success_estimate)
        .def_readonly("std_dev", &TrialReport::std_dev)
        .def_readonly("per_run", &TrialReport::per_run)
        .def_readonly("confusion", &TrialReport::confusion)
        .def_readonly("total_shots", &TrialReport::total_shots);

    module.def("simulate", &simulate, py::arg("alphabet"), py::arg("params"),
               py::arg("noise"), py::arg("plan"));

    auto baselines_mod = module.def_submodule("baselines", "Reference receivers and bounds");
    baselines_mod.def("heterodyne_qpsk", &baselines::heterodyne_qpsk, py::arg("alpha"));
    baselines_mod.def(
        "heterodyne_mpsk",
        [](int m, double alpha, double quad_tolerance) {
            baselines::QuadratureSpec spec;
            spec.m = m;
            spec.alpha = alpha;
            spec.quad_tolerance = quad_tolerance;
            return baselines::heterodyne_mpsk(spec);
        },
        py::arg("m"), py::arg("alpha"), py::arg("quad_tolerance") = 1e-9);
    baselines_mod.def("helstrom_mpsk", &baselines::helstrom_mpsk, py::arg("m"),
                      py::arg("alpha"));
    baselines_mod.def("analytic_receiver_qpsk", &baselines::analytic_receiver_qpsk);
    baselines_mod.def("analytic_success_qpsk", &baselines::analytic_success_qpsk,
                      py::arg("alpha"));
    baselines_mod.def("kennedy_nulling_qpsk", &baselines::kennedy_nulling_qpsk,
                      py::arg("alpha"));
    baselines_mod.def("kennedy_optamp_qpsk", &baselines::kennedy_optamp_qpsk);
    baselines_mod.def("heterodyne_with_efficiency", &baselines::heterodyne_with_efficiency,
                      py::arg("m"), py::arg("alpha"), py::arg("efficiency"));
}
