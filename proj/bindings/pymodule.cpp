// Python bindings for the main operations: system construction, function
// evaluation, constants, coefficient tables, verification and the DWT.
#include "splinewave/bspline.hpp"
#include "splinewave/serialization.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace splinewave;

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "cardinal B-spline wavelet construction and decay-law verification";

    mod.def("eval_bspline", &eval_bspline, py::arg("m"), py::arg("x"));
    mod.def("integer_samples", [](int m) {
        std::vector<double> out;
        for (const auto& q : integer_samples(m).samples) out.push_back(to_double(q));
        return out;
    }, py::arg("m"));
    mod.def("alpha0", &alpha0, py::arg("m"));
    mod.def("mu_values", &mu_values, py::arg("m"));
    mod.def("negative_roots", &negative_roots, py::arg("m"));

    py::class_<CoefficientTable>(mod, "CoefficientTable")
        .def_readonly("m", &CoefficientTable::m)
        .def_readonly("window", &CoefficientTable::window)
        .def_readonly("tail_bound", &CoefficientTable::tail_bound)
        .def_readonly("reliable_limit", &CoefficientTable::reliable_limit)
        .def("at", &CoefficientTable::at)
        .def("to_csv", [](const CoefficientTable& t) { return table_to_csv(t); })
        .def("to_json", [](const CoefficientTable& t) { return table_to_json(t); });

    py::class_<RecurrenceLimits>(mod, "RecurrenceLimits")
        .def_readonly("A", &RecurrenceLimits::A)
        .def_readonly("B", &RecurrenceLimits::B)
        .def_readonly("C", &RecurrenceLimits::C)
        .def_readonly("K_c", &RecurrenceLimits::K_c)
        .def_readonly("K_b", &RecurrenceLimits::K_b);

    py::class_<WaveletSystem>(mod, "WaveletSystem")
        .def_readonly("m", &WaveletSystem::m)
        .def_readonly("c_table", &WaveletSystem::c_table)
        .def_readonly("b_table", &WaveletSystem::b_table)
        .def_readonly("a_table", &WaveletSystem::a_table)
        .def_readonly("gamma_table", &WaveletSystem::gamma_table)
        .def_readonly("limits", &WaveletSystem::limits)
        .def_property_readonly("alpha0",
                               [](const WaveletSystem& s) { return s.spectrum.alpha0; })
        .def("phi", [](const WaveletSystem& s, double x) { return phi_eval(s, x); })
        .def("psi", [](const WaveletSystem& s, double x) { return psi_eval(s, x); })
        .def("gram_phi", [](const WaveletSystem& s, long long k) { return gram_phi(s, k); });

    mod.def("build_system",
            [](int m, double eps, bool series_tail) {
                BuildOptions opts;
                opts.series_tail = series_tail;
                return build_system(m, eps, opts);
            },
            py::arg("m"), py::arg("eps") = 1e-9, py::arg("series_tail") = false);

    py::class_<AsymptoticProfile>(mod, "AsymptoticProfile")
        .def_readonly("alpha0", &AsymptoticProfile::alpha0)
        .def_readonly("K_c", &AsymptoticProfile::K_c)
        .def_readonly("K_b", &AsymptoticProfile::K_b)
        .def("D", [](const AsymptoticProfile& p, int sign, int parity) {
            return p.D.at({sign, parity});
        })
        .def("E", [](const AsymptoticProfile& p, int sign, int parity) {
            return p.E.at({sign, parity});
        });
    mod.def("asymptotic_profile", &asymptotic_profile, py::arg("sys"));

    py::class_<VerificationReport>(mod, "VerificationReport")
        .def_readonly("m", &VerificationReport::m)
        .def("all_pass", &VerificationReport::all_pass)
        .def("to_json", [](const VerificationReport& r) { return report_to_json(r); })
        .def("to_text", [](const VerificationReport& r) { return report_to_text(r); });
    mod.def("verify", &verify, py::arg("sys"));

    py::class_<FilterPair>(mod, "FilterPair")
        .def_readonly("lowpass", &FilterPair::lowpass)
        .def_readonly("highpass", &FilterPair::highpass)
        .def_readonly("centroid", &FilterPair::centroid);
    mod.def("derive_filters", &derive_filters, py::arg("sys"), py::arg("eps") = 1e-9);

    py::class_<DwtResult>(mod, "DwtResult")
        .def_readonly("levels", &DwtResult::levels)
        .def_readonly("details", &DwtResult::details)
        .def_readonly("approximation", &DwtResult::approximation);
    mod.def("dwt_analyze", &dwt_analyze, py::arg("filters"), py::arg("signal"),
            py::arg("levels"));
    mod.def("dwt_synthesize", &dwt_synthesize, py::arg("filters"), py::arg("result"));
}
