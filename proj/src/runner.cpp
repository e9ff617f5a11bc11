#include "rcm/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "rcm/quadrature.hpp"

namespace rcm {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_double(double v) {
  // Shortest round-trip representation: deterministic and locale-free.
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

std::size_t conjugate_pair_count(int n) {
  return n % 2 == 0 ? static_cast<std::size_t>(n / 2 - 1)
                    : static_cast<std::size_t>((n - 1) / 2);
}

std::size_t spacings_per_realization(int n, SpacingKind kind, PairingPolicy policy) {
  const std::size_t pairs = conjugate_pair_count(n);
  const std::size_t complex_count = 2 * pairs;
  const std::size_t real_count = n % 2 == 0 ? 2 : 1;
  switch (kind) {
    case SpacingKind::Cc:
      return pairs;
    case SpacingKind::Rc:
      if (complex_count == 0) {
        return 0;
      }
      return policy == PairingPolicy::OnePerRealization ? 1 : real_count * complex_count;
    case SpacingKind::Generic:
      if (pairs < 2) {
        return 0;
      }
      return policy == PairingPolicy::OnePerRealization ? 1 : 2 * pairs * (pairs - 1);
  }
  throw std::logic_error("spacings_per_realization: unknown kind");
}

std::vector<double> extract_for(const Spectrum& spectrum, SpacingKind kind,
                                PairingPolicy policy, Substream* selector) {
  switch (kind) {
    case SpacingKind::Cc:
      return extract_cc(spectrum);
    case SpacingKind::Rc:
      return extract_rc(spectrum, policy, selector);
    case SpacingKind::Generic:
      return extract_generic(spectrum, policy, selector);
  }
  throw std::logic_error("extract_for: unknown kind");
}

// Diagnostic CDF for densities outside the law catalogue: cumulative Simpson
// grid with linear interpolation, adequate for comparing KS values at the
// 1e-5 level.
class NumericCdf {
 public:
  NumericCdf(const std::function<double(double)>& density, double upper, int cells)
      : upper_(upper), step_(upper / cells), cum_(cells + 1, 0.0) {
    for (int k = 1; k <= cells; ++k) {
      cum_[k] = cum_[k - 1] +
                integrate_adaptive(density, (k - 1) * step_, k * step_, 1e-12);
    }
    total_ = cum_.back();
  }

  double total_mass() const { return total_; }

  double operator()(double x) const {
    if (x <= 0.0) {
      return 0.0;
    }
    if (x >= upper_) {
      return 1.0;
    }
    const double position = x / step_;
    const auto k = static_cast<std::size_t>(position);
    const double frac = position - static_cast<double>(k);
    const double value = cum_[k] + frac * (cum_[k + 1] - cum_[k]);
    return std::clamp(value / total_, 0.0, 1.0);
  }

 private:
  double upper_;
  double step_;
  std::vector<double> cum_;
  double total_ = 0.0;
};

double ks_against_numeric_cdf(std::vector<double> values, const NumericCdf& cdf) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = cdf(values[i]);
    sup = std::max(sup, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
  }
  return sup;
}

void write_lines(const std::filesystem::path& path,
                 const std::function<void(std::ofstream&)>& body) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  body(out);
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

std::string data_extension(DataFormat format) {
  return format == DataFormat::Csv ? ".csv" : ".json";
}

void write_values_file(const std::filesystem::path& path, const std::vector<double>& values,
                       DataFormat format) {
  write_lines(path, [&](std::ofstream& out) {
    if (format == DataFormat::Csv) {
      for (double v : values) {
        out << format_double(v) << '\n';
      }
    } else {
      nlohmann::json j = values;
      out << j.dump() << '\n';
    }
  });
}

void write_histogram_file(const std::filesystem::path& path, const Histogram& histogram,
                          DataFormat format) {
  write_lines(path, [&](std::ofstream& out) {
    if (format == DataFormat::Csv) {
      for (std::size_t b = 0; b + 1 < histogram.edges.size(); ++b) {
        out << format_double(histogram.edges[b]) << ','
            << format_double(histogram.edges[b + 1]) << ','
            << format_double(histogram.density[b]) << '\n';
      }
    } else {
      nlohmann::ordered_json j;
      j["bin_edges"] = histogram.edges;
      j["counts"] = histogram.counts;
      j["density"] = histogram.density;
      out << j.dump() << '\n';
    }
  });
}

void write_density_file(const std::filesystem::path& path, const SpacingLaw& law,
                        DataFormat format) {
  constexpr int kPoints = 600;
  constexpr double kUpper = 6.0;
  write_lines(path, [&](std::ofstream& out) {
    if (format == DataFormat::Csv) {
      for (int k = 0; k <= kPoints; ++k) {
        const double x = kUpper * k / kPoints;
        out << format_double(x) << ',' << format_double(law.density(x)) << '\n';
      }
    } else {
      nlohmann::ordered_json j;
      std::vector<double> xs;
      std::vector<double> ps;
      for (int k = 0; k <= kPoints; ++k) {
        const double x = kUpper * k / kPoints;
        xs.push_back(x);
        ps.push_back(law.density(x));
      }
      j["x"] = xs;
      j["density"] = ps;
      out << j.dump() << '\n';
    }
  });
}

nlohmann::ordered_json config_to_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["experiment"] = experiment_name(config.experiment);
  j["dimension"] = config.dimension.has_value() ? nlohmann::ordered_json(*config.dimension)
                                                : nlohmann::ordered_json(nullptr);
  j["scale_a"] = config.scale_a;
  j["realizations"] = config.realizations.has_value()
                          ? nlohmann::ordered_json(*config.realizations)
                          : nlohmann::ordered_json(nullptr);
  j["master_seed"] = config.master_seed;
  j["pairing"] = config.policy == PairingPolicy::OnePerRealization ? "one" : "all";
  j["bin_count"] = config.bin_count;
  j["out_dir"] = config.out_dir.string();
  j["worker_count"] = config.worker_count;
  j["format"] = data_format_name(config.format);
  return j;
}

}  // namespace

std::string experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Fig1Cc:
      return "fig1_cc";
    case ExperimentKind::Fig2Rc:
      return "fig2_rc";
    case ExperimentKind::Fig3Generic:
      return "fig3_generic";
    case ExperimentKind::Structural:
      return "structural";
    case ExperimentKind::All:
      return "all";
  }
  throw std::logic_error("experiment_name: unknown kind");
}

std::optional<ExperimentKind> parse_experiment(std::string_view name) {
  if (name == "fig1_cc") return ExperimentKind::Fig1Cc;
  if (name == "fig2_rc") return ExperimentKind::Fig2Rc;
  if (name == "fig3_generic") return ExperimentKind::Fig3Generic;
  if (name == "structural") return ExperimentKind::Structural;
  if (name == "all") return ExperimentKind::All;
  return std::nullopt;
}

std::string data_format_name(DataFormat format) {
  return format == DataFormat::Csv ? "csv" : "json";
}

std::optional<DataFormat> parse_data_format(std::string_view name) {
  if (name == "csv") return DataFormat::Csv;
  if (name == "json") return DataFormat::Json;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (dimension.has_value() && *dimension < 2) {
    throw std::invalid_argument("RunConfig: dimension must be >= 2");
  }
  if (!(scale_a > 0.0) || !std::isfinite(scale_a)) {
    throw std::invalid_argument("RunConfig: scale-a must be positive and finite");
  }
  if (realizations.has_value() && *realizations < 1) {
    throw std::invalid_argument("RunConfig: realizations must be >= 1");
  }
  if (bin_count < 1) {
    throw std::invalid_argument("RunConfig: bins must be >= 1");
  }
  if (worker_count < 1) {
    throw std::invalid_argument("RunConfig: workers must be >= 1");
  }
  for (const auto& job : expand_jobs(*this)) {
    if (spacings_per_realization(job.dimension, job.kind, PairingPolicy::OnePerRealization) ==
        0) {
      throw std::invalid_argument("RunConfig: experiment " + job.label +
                                  " has no admissible spacings at dimension " +
                                  std::to_string(job.dimension));
    }
  }
}

std::vector<ExperimentJob> expand_jobs(const RunConfig& config) {
  std::vector<ExperimentJob> jobs;
  const bool custom = config.dimension.has_value() || config.realizations.has_value();

  const auto threshold_for = [](std::int64_t n) {
    return ks_critical_value(static_cast<std::size_t>(n), 0.01);
  };

  const auto add_fig1 = [&] {
    const int n = config.dimension.value_or(3);
    const std::int64_t r = config.realizations.value_or(10000);
    const double threshold = (n == 3 && r == 10000) ? 0.02 : threshold_for(r);
    jobs.push_back({"cc", SpacingKind::Cc, LawKind::CcNorm, n, r, threshold});
  };
  const auto add_fig2 = [&] {
    if (!custom) {
      jobs.push_back({"rc_n3", SpacingKind::Rc, LawKind::RcNorm, 3, 10000, 0.02});
      jobs.push_back({"rc_n100", SpacingKind::Rc, LawKind::RcNorm, 100, 1000, 0.05});
      return;
    }
    const int n = config.dimension.value_or(3);
    const std::int64_t r = config.realizations.value_or(10000);
    double threshold = threshold_for(r);
    if (n == 3 && r == 10000) threshold = 0.02;
    if (n == 100 && r == 1000) threshold = 0.05;
    jobs.push_back({"rc", SpacingKind::Rc, LawKind::RcNorm, n, r, threshold});
  };
  const auto add_fig3 = [&] {
    const int n = config.dimension.value_or(100);
    const std::int64_t r = config.realizations.value_or(5000);
    const double threshold = (n == 100 && r == 5000) ? 0.025 : threshold_for(r);
    jobs.push_back({"generic", SpacingKind::Generic, LawKind::Wigner, n, r, threshold});
  };

  switch (config.experiment) {
    case ExperimentKind::Fig1Cc:
      add_fig1();
      break;
    case ExperimentKind::Fig2Rc:
      add_fig2();
      break;
    case ExperimentKind::Fig3Generic:
      add_fig3();
      break;
    case ExperimentKind::Structural:
      break;
    case ExperimentKind::All:
      add_fig1();
      add_fig2();
      add_fig3();
      break;
  }
  return jobs;
}

std::vector<double> ensemble_spacings(const EnsembleConfig& config, SpacingKind kind,
                                      PairingPolicy policy, int worker_count) {
  config.validate();
  if (worker_count < 1) {
    throw std::invalid_argument("ensemble_spacings: worker_count must be >= 1");
  }
  const std::size_t per_realization = spacings_per_realization(config.dimension, kind, policy);
  const auto total = static_cast<std::size_t>(config.realization_count);
  std::vector<double> values(per_realization * total);
  if (per_realization == 0) {
    return values;
  }

  const auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto row = sample_first_row(config, static_cast<std::int64_t>(k));
      const auto spectrum = compute_spectrum(row);
      Substream selector(config.master_seed, k, kDomainPairSelection);
      const auto spacings = extract_for(spectrum, kind, policy, &selector);
      std::copy(spacings.begin(), spacings.end(), values.begin() + k * per_realization);
    }
  };

  const auto workers = static_cast<std::size_t>(std::min<std::int64_t>(
      worker_count, config.realization_count));
  if (workers <= 1) {
    worker(0, total);
    return values;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = total * w / workers;
    const std::size_t end = total * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        worker(begin, end);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (const auto& failure : failures) {
    if (failure) {
      std::rethrow_exception(failure);
    }
  }
  return values;
}

MonteCarloResult run_monte_carlo_job(const ExperimentJob& job, const RunConfig& config) {
  const auto start = Clock::now();
  MonteCarloResult result;
  result.job = job;
  result.seed = config.master_seed;
  result.policy = config.policy;

  EnsembleConfig ensemble;
  ensemble.dimension = job.dimension;
  ensemble.scale_a = config.scale_a;
  ensemble.realization_count = job.realizations;
  ensemble.master_seed = config.master_seed;

  const auto raw_one = ensemble_spacings(ensemble, job.kind, PairingPolicy::OnePerRealization,
                                         config.worker_count);
  const auto law = SpacingLaw::make(job.law);
  const auto normalized_one = normalize_to_unit_mean(job.kind, raw_one);

  result.sample_size = raw_one.size();
  result.empirical_mean = normalized_one.empirical_mean;
  result.ks = ks_distance(normalized_one, law);
  result.pass = result.ks < job.ks_threshold;

  std::optional<SpacingSample> all_pairs_sample;
  if (job.kind == SpacingKind::Rc) {
    const auto raw_all = ensemble_spacings(ensemble, job.kind, PairingPolicy::AllPairs,
                                           config.worker_count);
    all_pairs_sample = normalize_to_unit_mean(job.kind, raw_all);
    result.ks_all_pairs = ks_distance(*all_pairs_sample, law);

    const auto raw_law = SpacingLaw::make(LawKind::RcRaw, config.scale_a);
    result.ks_raw = ks_distance(make_raw_sample(job.kind, raw_one), raw_law);

    // The exponent variant without the scale decays only for A < 2.
    const bool normalizable = config.scale_a < 2.0;
    result.unscaled_exponent_normalizable = normalizable;
    if (normalizable) {
      const auto variant_density = [&](double x) {
        return rc_raw_density_unscaled_exponent(config.scale_a, x);
      };
      double upper = 1.0;
      double peak = 0.0;
      for (double x = 0.0; x <= 4.0; x += 0.0625) {
        peak = std::max(peak, variant_density(x));
      }
      while (variant_density(upper) > 1e-16 * peak) {
        upper *= 1.25;
      }
      const NumericCdf variant_cdf(variant_density, upper, 8192);
      result.ks_raw_unscaled_exponent = ks_against_numeric_cdf(raw_one, variant_cdf);
    }
  }

  if (config.policy == PairingPolicy::AllPairs && job.kind != SpacingKind::Cc) {
    if (all_pairs_sample) {
      result.normalized_sample = std::move(*all_pairs_sample);
    } else {
      const auto raw_all =
          ensemble_spacings(ensemble, job.kind, PairingPolicy::AllPairs, config.worker_count);
      result.normalized_sample = normalize_to_unit_mean(job.kind, raw_all);
    }
  } else {
    result.normalized_sample = normalized_one;
  }
  result.histogram = build_histogram(result.normalized_sample, config.bin_count);
  result.wall_ms = elapsed_ms(start);
  return result;
}

StructuralResult run_structural(std::uint64_t seed, int detailed_dimension) {
  const auto start = Clock::now();
  StructuralResult result;

  // Exact pseudo-symmetry of sampled circulants.
  for (int n : {2, 3, 4, 8, 16, 64, 100}) {
    EnsembleConfig config{n, 1.0, 1000, seed};
    const Parity parity(n);
    for (std::int64_t k = 0; k < config.realization_count; ++k) {
      const auto m = materialize_matrix(sample_first_row(config, k));
      result.max_pseudo_symmetry_residual = std::max(
          result.max_pseudo_symmetry_residual, pseudo_symmetry_residual(m, parity));
    }
  }

  // Eigen-equation oracle and inversion round trip on random rows.
  for (int n : {3, 4, 8, 16, 64}) {
    EnsembleConfig config{n, 1.0, 100, seed};
    for (std::int64_t k = 0; k < config.realization_count; ++k) {
      const auto row = sample_first_row(config, k);
      const auto spectrum = compute_spectrum(row);
      double max_abs = 0.0;
      for (double a : row.coefficients) {
        max_abs = std::max(max_abs, std::abs(a));
      }

      const Eigen::MatrixXcd m = materialize_matrix(row).cast<std::complex<double>>();
      for (int l = 0; l < n; ++l) {
        const auto u = fourier_eigenvector(n, l);
        const Eigen::Map<const Eigen::VectorXcd> uv(u.data(), n);
        const double residual =
            (m * uv - spectrum.eigenvalue(l) * uv).cwiseAbs().maxCoeff() / (1.0 + max_abs);
        result.max_eigen_equation_residual =
            std::max(result.max_eigen_equation_residual, residual);
      }

      const auto round_trip = inverse_coefficients(spectrum);
      for (int i = 0; i < n; ++i) {
        result.max_round_trip_error =
            std::max(result.max_round_trip_error,
                     std::abs(round_trip.coefficients[i] - row.coefficients[i]) / max_abs);
      }
    }
  }

  // S^2 = n * parity, entrywise, scaled by n; n = 2 recorded separately.
  for (int n = 2; n <= 64; ++n) {
    const Eigen::MatrixXcd s = inversion_matrix(n);
    const Eigen::MatrixXcd target = Parity(n).dense().cast<std::complex<double>>() *
                                    static_cast<double>(n);
    const double residual = (s * s - target).cwiseAbs().maxCoeff() / n;
    if (n == 2) {
      result.s_squared_residual_at_2 = residual;
      result.s_identity_holds_at_2 = residual < 1e-12;
    } else {
      result.max_s_squared_residual = std::max(result.max_s_squared_residual, residual);
    }
  }

  // Parity claims for the Fourier basis.
  double min_complex_residual = std::numeric_limits<double>::infinity();
  for (int n = 2; n <= 64; ++n) {
    const auto report = fourier_symmetry_report(n);
    result.symmetry_summaries.push_back({n, report.max_real_class_residual,
                                         report.max_complex_class_pt_norm,
                                         report.min_complex_class_residual});
    if (n >= 3) {
      min_complex_residual = std::min(min_complex_residual, report.min_complex_class_residual);
    }
  }
  result.detailed_symmetry = fourier_symmetry_report(detailed_dimension);

  double max_real_residual = 0.0;
  double max_pt_norm = 0.0;
  for (const auto& summary : result.symmetry_summaries) {
    max_real_residual = std::max(max_real_residual, summary.max_real_class_residual);
    max_pt_norm = std::max(max_pt_norm, summary.max_complex_class_pt_norm);
  }

  result.pass = result.max_pseudo_symmetry_residual == 0.0 &&
                result.max_eigen_equation_residual < 1e-10 &&
                result.max_round_trip_error < 1e-12 &&
                result.max_s_squared_residual < 1e-12 && max_real_residual < 1e-12 &&
                max_pt_norm < 1e-12 && min_complex_residual > 0.1;
  result.wall_ms = elapsed_ms(start);
  return result;
}

RunReport execute(const RunConfig& config) {
  config.validate();
  RunReport report;
  report.config = config;
  for (const auto& job : expand_jobs(config)) {
    report.experiments.push_back(run_monte_carlo_job(job, config));
    report.all_pass = report.all_pass && report.experiments.back().pass;
  }
  if (config.experiment == ExperimentKind::Structural ||
      config.experiment == ExperimentKind::All) {
    report.structural = run_structural(config.master_seed, config.dimension.value_or(8));
    report.all_pass = report.all_pass && report.structural->pass;
  }
  return report;
}

nlohmann::ordered_json symmetry_report_to_json(const SymmetryReport& report) {
  nlohmann::ordered_json j;
  j["dimension"] = report.dimension;
  j["max_real_class_residual"] = report.max_real_class_residual;
  j["max_complex_class_pt_norm"] = report.max_complex_class_pt_norm;
  j["min_complex_class_residual"] = report.min_complex_class_residual;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& record : report.records) {
    nlohmann::ordered_json r;
    r["index"] = record.index;
    r["class"] = record.real_class ? "real" : "complex";
    r["parity_eigen_residual"] = record.parity_eigen_residual;
    r["pt_norm"] = {record.pt_norm.real(), record.pt_norm.imag()};
    r["pair_sesquilinear"] = {record.pair_sesquilinear.real(), record.pair_sesquilinear.imag()};
    r["pair_bilinear"] = {record.pair_bilinear.real(), record.pair_bilinear.imag()};
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j;
}

nlohmann::ordered_json report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["format_version"] = report.format_version;
  j["config"] = config_to_json(report.config);

  nlohmann::ordered_json experiments = nlohmann::ordered_json::array();
  for (const auto& result : report.experiments) {
    nlohmann::ordered_json e;
    e["label"] = result.job.label;
    e["kind"] = spacing_kind_name(result.job.kind);
    e["law"] = law_name(result.job.law);
    e["dimension"] = result.job.dimension;
    e["realizations"] = result.job.realizations;
    e["scale_a"] = report.config.scale_a;
    e["seed"] = result.seed;
    e["sample_size"] = result.sample_size;
    e["empirical_mean_spacing"] = result.empirical_mean;
    e["ks_distance"] = result.ks;
    e["ks_threshold"] = result.job.ks_threshold;
    e["pass"] = result.pass;
    if (result.ks_all_pairs) {
      e["ks_distance_all_pairs"] = *result.ks_all_pairs;
    }
    if (result.ks_raw) {
      e["ks_raw_law"] = *result.ks_raw;
    }
    if (result.unscaled_exponent_normalizable) {
      e["raw_law_unscaled_exponent_normalizable"] = *result.unscaled_exponent_normalizable;
      if (result.ks_raw_unscaled_exponent) {
        e["ks_raw_law_unscaled_exponent"] = *result.ks_raw_unscaled_exponent;
      }
    }
    e["wall_ms"] = result.wall_ms;
    experiments.push_back(std::move(e));
  }
  j["experiments"] = std::move(experiments);

  if (report.structural) {
    const auto& s = *report.structural;
    nlohmann::ordered_json sj;
    sj["max_pseudo_symmetry_residual"] = s.max_pseudo_symmetry_residual;
    sj["max_eigen_equation_residual"] = s.max_eigen_equation_residual;
    sj["max_round_trip_error"] = s.max_round_trip_error;
    sj["max_s_squared_residual"] = s.max_s_squared_residual;
    sj["s_identity_holds_at_2"] = s.s_identity_holds_at_2;
    sj["s_squared_residual_at_2"] = s.s_squared_residual_at_2;
    nlohmann::ordered_json summaries = nlohmann::ordered_json::array();
    for (const auto& summary : s.symmetry_summaries) {
      summaries.push_back({{"dimension", summary.dimension},
                           {"max_real_class_residual", summary.max_real_class_residual},
                           {"max_complex_class_pt_norm", summary.max_complex_class_pt_norm},
                           {"min_complex_class_residual", summary.min_complex_class_residual}});
    }
    sj["symmetry_by_dimension"] = std::move(summaries);
    sj["symmetry_detail"] = symmetry_report_to_json(s.detailed_symmetry);
    sj["pass"] = s.pass;
    sj["wall_ms"] = s.wall_ms;
    j["structural"] = std::move(sj);
  }
  j["all_pass"] = report.all_pass;
  return j;
}

void emit_plot_script(const RunReport& report, const std::filesystem::path& out_dir) {
  const auto script_path = out_dir / "plots.gp";
  write_lines(script_path, [&](std::ofstream& out) {
    out << "# Spacing histograms with analytic overlays; run: gnuplot plots.gp\n";
    if (report.experiments.empty()) {
      out << "# no experiment data in this run\n";
      return;
    }
    if (report.config.format != DataFormat::Csv) {
      out << "# data files were written as JSON; re-run with --format csv to plot\n";
      return;
    }
    out << "set terminal pngcairo size 900,620 noenhanced\n";
    out << "set style fill solid 0.40 border lc rgb '#35506e'\n";
    out << "set xlabel 'normalized spacing'\n";
    out << "set ylabel 'density'\n";
    out << "set xrange [0:4]\n";
    for (const auto& result : report.experiments) {
      const auto histogram = "histogram_" + result.job.label + ".csv";
      const auto density = "density_" + law_name(result.job.law) + ".csv";
      if (!std::filesystem::exists(out_dir / histogram) ||
          !std::filesystem::exists(out_dir / density)) {
        out << "# skipped " << result.job.label << ": missing data file\n";
        continue;
      }
      out << "set output '" << result.job.label << ".png'\n";
      out << "set title '" << result.job.label << " spacing distribution'\n";
      out << "plot '" << histogram
          << "' using (0.5*($1+$2)):3:($2-$1) with boxes lc rgb '#7da7d9' title 'ensemble', '"
          << density << "' using 1:2 with lines lw 2 lc rgb '#c0392b' title 'analytic'\n";
    }
  });
}

RunReport run(const RunConfig& config) {
  RunReport report = execute(config);
  std::filesystem::create_directories(config.out_dir);

  for (const auto& result : report.experiments) {
    const auto ext = data_extension(config.format);
    write_values_file(config.out_dir / ("spacings_" + result.job.label + ext),
                      result.normalized_sample.values, config.format);
    write_histogram_file(config.out_dir / ("histogram_" + result.job.label + ext),
                         result.histogram, config.format);
  }

  // One density table per law in use.
  std::vector<LawKind> laws;
  for (const auto& result : report.experiments) {
    if (std::find(laws.begin(), laws.end(), result.job.law) == laws.end()) {
      laws.push_back(result.job.law);
    }
  }
  for (LawKind law : laws) {
    write_density_file(config.out_dir / ("density_" + law_name(law) + data_extension(config.format)),
                       SpacingLaw::make(law), config.format);
  }

  write_lines(config.out_dir / "report.json",
              [&](std::ofstream& out) { out << report_to_json(report).dump(2) << '\n'; });
  emit_plot_script(report, config.out_dir);
  return report;
}

}  // namespace rcm
