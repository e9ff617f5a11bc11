#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "rcm/ensemble.hpp"
#include "rcm/laws.hpp"
#include "rcm/quadrature.hpp"
#include "rcm/rng.hpp"
#include "rcm/runner.hpp"
#include "rcm/spacing.hpp"
#include "rcm/spectral.hpp"
#include "rcm/symmetry.hpp"

namespace py = pybind11;

namespace {

void bind_ensemble(py::module_& m) {
  py::class_<rcm::EnsembleConfig>(m, "EnsembleConfig")
      .def(py::init<>())
      .def(py::init([](int dimension, double scale_a, std::int64_t realization_count,
                       std::uint64_t master_seed) {
             rcm::EnsembleConfig config{dimension, scale_a, realization_count, master_seed};
             config.validate();
             return config;
           }),
           py::arg("dimension"), py::arg("scale_a"), py::arg("realization_count"),
           py::arg("master_seed"))
      .def_readwrite("dimension", &rcm::EnsembleConfig::dimension)
      .def_readwrite("scale_a", &rcm::EnsembleConfig::scale_a)
      .def_readwrite("realization_count", &rcm::EnsembleConfig::realization_count)
      .def_readwrite("master_seed", &rcm::EnsembleConfig::master_seed)
      .def("validate", &rcm::EnsembleConfig::validate)
      .def("coefficient_sigma", &rcm::EnsembleConfig::coefficient_sigma);

  py::class_<rcm::FirstRow>(m, "FirstRow")
      .def(py::init([](std::vector<double> coefficients, std::int64_t realization_index) {
             return rcm::FirstRow{std::move(coefficients), realization_index};
           }),
           py::arg("coefficients"), py::arg("realization_index") = 0)
      .def_readwrite("coefficients", &rcm::FirstRow::coefficients)
      .def_readwrite("realization_index", &rcm::FirstRow::realization_index)
      .def("dimension", &rcm::FirstRow::dimension);

  py::class_<rcm::Parity>(m, "Parity")
      .def(py::init<int>(), py::arg("dimension"))
      .def("dimension", &rcm::Parity::dimension)
      .def("map", &rcm::Parity::map, py::arg("index"))
      .def("dense", &rcm::Parity::dense);

  m.def("generalized_parity", &rcm::generalized_parity, py::arg("dimension"));
  m.def("sample_first_row", &rcm::sample_first_row, py::arg("config"), py::arg("k"));
  m.def("materialize_matrix", &rcm::materialize_matrix, py::arg("row"));
  m.def("pseudo_symmetry_residual", &rcm::pseudo_symmetry_residual, py::arg("matrix"),
        py::arg("parity"));
}

void bind_spectral(py::module_& m) {
  py::class_<rcm::Spectrum>(m, "Spectrum")
      .def(py::init<std::vector<std::complex<double>>, std::int64_t>(), py::arg("eigenvalues"),
           py::arg("realization_index") = 0)
      .def("dimension", &rcm::Spectrum::dimension)
      .def("eigenvalues", &rcm::Spectrum::eigenvalues)
      .def("eigenvalue", &rcm::Spectrum::eigenvalue, py::arg("l"))
      .def("is_real_class", &rcm::Spectrum::is_real_class, py::arg("l"))
      .def("partner", &rcm::Spectrum::partner, py::arg("l"))
      .def("real_indices", &rcm::Spectrum::real_indices)
      .def("complex_indices", &rcm::Spectrum::complex_indices)
      .def("conjugate_pairs", &rcm::Spectrum::conjugate_pairs)
      .def("realization_index", &rcm::Spectrum::realization_index);

  m.def("unit_roots", &rcm::unit_roots, py::arg("n"));
  m.def("compute_spectrum", &rcm::compute_spectrum, py::arg("row"));
  m.def("fourier_eigenvector", &rcm::fourier_eigenvector, py::arg("n"), py::arg("l"));
  m.def("inverse_coefficients", &rcm::inverse_coefficients, py::arg("spectrum"));
  m.def("inversion_matrix", &rcm::inversion_matrix, py::arg("n"));
}

void bind_symmetry(py::module_& m) {
  m.def("apply_parity", &rcm::apply_parity, py::arg("vector"), py::arg("parity"));
  m.def("parity_eigen_residual", &rcm::parity_eigen_residual, py::arg("vector"),
        py::arg("parity"));
  m.def("pt_norm", &rcm::pt_norm, py::arg("vector"), py::arg("parity"));
  m.def(
      "pair_products",
      [](const rcm::ComplexVector& v1, const rcm::ComplexVector& v2, const rcm::Parity& parity) {
        const auto products = rcm::pair_products(v1, v2, parity);
        return py::make_tuple(products.sesquilinear, products.bilinear);
      },
      py::arg("v1"), py::arg("v2"), py::arg("parity"),
      "Returns (sesquilinear, bilinear) parity products.");
  m.def(
      "fourier_symmetry_report",
      [](int n) {
        const auto report = rcm::fourier_symmetry_report(n);
        return rcm::symmetry_report_to_json(report).dump();
      },
      py::arg("n"), "JSON summary of the parity diagnostics for the Fourier basis.");
}

void bind_laws(py::module_& m) {
  m.def("bessel_i0", &rcm::bessel_i0, py::arg("x"));
  m.def("bessel_i0_scaled", &rcm::bessel_i0_scaled, py::arg("x"));
  m.def("gauss_2f1", &rcm::gauss_2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
  m.def("rc_mean_constant", &rcm::rc_mean_constant);
  m.def("mean_spacing_rc", &rcm::mean_spacing_rc, py::arg("scale_a"));
  m.def("integrate_adaptive", &rcm::integrate_adaptive, py::arg("f"), py::arg("lo"),
        py::arg("hi"), py::arg("abs_tol"), py::arg("max_depth") = 48);

  py::enum_<rcm::LawKind>(m, "LawKind")
      .value("CC_RAW", rcm::LawKind::CcRaw)
      .value("CC_NORM", rcm::LawKind::CcNorm)
      .value("RC_RAW", rcm::LawKind::RcRaw)
      .value("RC_NORM", rcm::LawKind::RcNorm)
      .value("WIGNER", rcm::LawKind::Wigner);
  m.def("law_is_normalized", &rcm::law_is_normalized, py::arg("kind"));
  m.def("law_name", &rcm::law_name, py::arg("kind"));

  py::class_<rcm::SpacingLaw>(m, "SpacingLaw")
      .def_static("make", &rcm::SpacingLaw::make, py::arg("kind"), py::arg("scale_a") = 1.0)
      .def("kind", &rcm::SpacingLaw::kind)
      .def("scale_a", &rcm::SpacingLaw::scale_a)
      .def("density", &rcm::SpacingLaw::density, py::arg("x"))
      .def("cdf", &rcm::SpacingLaw::cdf, py::arg("x"))
      .def("mean", &rcm::SpacingLaw::mean)
      .def("upper_limit", &rcm::SpacingLaw::upper_limit);
}

void bind_spacing(py::module_& m) {
  py::class_<rcm::Substream>(m, "Substream")
      .def(py::init<std::uint64_t, std::uint64_t, std::uint32_t>(), py::arg("key"),
           py::arg("stream"), py::arg("domain"))
      .def("next_u64", &rcm::Substream::next_u64)
      .def("next_uniform", &rcm::Substream::next_uniform)
      .def("next_gaussian", &rcm::Substream::next_gaussian)
      .def("next_below", &rcm::Substream::next_below, py::arg("bound"));
  m.attr("DOMAIN_COEFFICIENTS") = rcm::kDomainCoefficients;
  m.attr("DOMAIN_PAIR_SELECTION") = rcm::kDomainPairSelection;
  m.attr("DOMAIN_LAW_SAMPLING") = rcm::kDomainLawSampling;

  py::enum_<rcm::SpacingKind>(m, "SpacingKind")
      .value("CC", rcm::SpacingKind::Cc)
      .value("RC", rcm::SpacingKind::Rc)
      .value("GENERIC", rcm::SpacingKind::Generic);
  py::enum_<rcm::PairingPolicy>(m, "PairingPolicy")
      .value("ONE_PER_REALIZATION", rcm::PairingPolicy::OnePerRealization)
      .value("ALL_PAIRS", rcm::PairingPolicy::AllPairs);

  py::class_<rcm::SpacingSample>(m, "SpacingSample")
      .def(py::init<>())
      .def_readwrite("kind", &rcm::SpacingSample::kind)
      .def_readwrite("values", &rcm::SpacingSample::values)
      .def_readwrite("normalized", &rcm::SpacingSample::normalized)
      .def_readwrite("empirical_mean", &rcm::SpacingSample::empirical_mean);

  m.def("make_raw_sample", &rcm::make_raw_sample, py::arg("kind"), py::arg("values"));
  m.def("extract_cc", &rcm::extract_cc, py::arg("spectrum"));
  m.def("extract_rc", &rcm::extract_rc, py::arg("spectrum"), py::arg("policy"),
        py::arg("selector") = nullptr);
  m.def("extract_generic", &rcm::extract_generic, py::arg("spectrum"), py::arg("policy"),
        py::arg("selector") = nullptr);
  m.def("normalize_to_unit_mean", &rcm::normalize_to_unit_mean, py::arg("kind"),
        py::arg("values"));
  m.def("ks_distance", &rcm::ks_distance, py::arg("sample"), py::arg("law"));
  m.def("ks_critical_value", &rcm::ks_critical_value, py::arg("n"), py::arg("alpha"));

  py::class_<rcm::Histogram>(m, "Histogram")
      .def_readonly("edges", &rcm::Histogram::edges)
      .def_readonly("counts", &rcm::Histogram::counts)
      .def_readonly("density", &rcm::Histogram::density);
  m.def("build_histogram", &rcm::build_histogram, py::arg("sample"), py::arg("bin_count"));
}

void bind_runner(py::module_& m) {
  py::enum_<rcm::ExperimentKind>(m, "ExperimentKind")
      .value("FIG1_CC", rcm::ExperimentKind::Fig1Cc)
      .value("FIG2_RC", rcm::ExperimentKind::Fig2Rc)
      .value("FIG3_GENERIC", rcm::ExperimentKind::Fig3Generic)
      .value("STRUCTURAL", rcm::ExperimentKind::Structural)
      .value("ALL", rcm::ExperimentKind::All);
  py::enum_<rcm::DataFormat>(m, "DataFormat")
      .value("CSV", rcm::DataFormat::Csv)
      .value("JSON", rcm::DataFormat::Json);

  py::class_<rcm::RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("experiment", &rcm::RunConfig::experiment)
      .def_readwrite("dimension", &rcm::RunConfig::dimension)
      .def_readwrite("scale_a", &rcm::RunConfig::scale_a)
      .def_readwrite("realizations", &rcm::RunConfig::realizations)
      .def_readwrite("master_seed", &rcm::RunConfig::master_seed)
      .def_readwrite("policy", &rcm::RunConfig::policy)
      .def_readwrite("bin_count", &rcm::RunConfig::bin_count)
      .def_readwrite("out_dir", &rcm::RunConfig::out_dir)
      .def_readwrite("worker_count", &rcm::RunConfig::worker_count)
      .def_readwrite("format", &rcm::RunConfig::format)
      .def("validate", &rcm::RunConfig::validate);

  m.def("ensemble_spacings", &rcm::ensemble_spacings, py::arg("config"), py::arg("kind"),
        py::arg("policy"), py::arg("worker_count") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "execute_json",
      [](const rcm::RunConfig& config) {
        py::gil_scoped_release release;
        return rcm::report_to_json(rcm::execute(config)).dump();
      },
      py::arg("config"), "Run the configured experiments; returns the report as a JSON string.");
  m.def(
      "run_json",
      [](const rcm::RunConfig& config) {
        py::gil_scoped_release release;
        return rcm::report_to_json(rcm::run(config)).dump();
      },
      py::arg("config"),
      "Run the configured experiments and write data files; returns the report JSON.");
}

}  // namespace

PYBIND11_MODULE(_rcm, m) {
  m.doc() = "Gaussian ensembles of real cyclic matrices: closed-form spectra, parity "
            "symmetry diagnostics, and level-spacing statistics.";
  bind_ensemble(m);
  bind_spectral(m);
  bind_symmetry(m);
  bind_laws(m);
  bind_spacing(m);
  bind_runner(m);
}
