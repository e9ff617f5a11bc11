#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rcm/ensemble.hpp"
#include "rcm/laws.hpp"
#include "rcm/rng.hpp"
#include "rcm/spacing.hpp"
#include "rcm/spectral.hpp"

using rcm::EnsembleConfig;
using rcm::FirstRow;
using rcm::LawKind;
using rcm::PairingPolicy;
using rcm::SpacingKind;
using rcm::SpacingLaw;
using rcm::Spectrum;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Numeric inverse CDF by bisection; test-side sampler for law-distributed
// draws.
double inverse_cdf(const SpacingLaw& law, double p) {
  double lo = 0.0;
  double hi = law.upper_limit();
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (law.cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("cc extraction at n = 3 matches the closed form") {
  const double a2 = 0.8, a3 = -0.35;
  const auto spectrum = rcm::compute_spectrum(FirstRow{{0.1, a2, a3}, 0});
  const auto values = rcm::extract_cc(spectrum);
  REQUIRE(values.size() == 1);
  CHECK(values[0] == doctest::Approx(std::sqrt(3.0) * std::abs(a3 - a2)).epsilon(1e-12));

  SUBCASE("closed forms hold across random rows") {
    EnsembleConfig config{3, 1.0, 50, 606};
    for (std::int64_t k = 0; k < config.realization_count; ++k) {
      const auto row = rcm::sample_first_row(config, k);
      const auto spec_k = rcm::compute_spectrum(row);
      const double b2 = row.coefficients[1];
      const double b3 = row.coefficients[2];

      const auto cc = rcm::extract_cc(spec_k);
      REQUIRE(cc.size() == 1);
      CHECK(cc[0] == doctest::Approx(std::sqrt(3.0) * std::abs(b3 - b2)).epsilon(1e-12));

      const auto rc = rcm::extract_rc(spec_k, PairingPolicy::AllPairs);
      const std::complex<double> closed{1.5 * (b2 + b3), std::sqrt(3.0) / 2.0 * (b2 - b3)};
      REQUIRE(rc.size() == 2);
      CHECK(rc[0] == doctest::Approx(std::abs(closed)).epsilon(1e-12));
    }
  }

  SUBCASE("equal tail coefficients give zero spacing") {
    const auto degenerate = rcm::compute_spectrum(FirstRow{{0.0, 1.0, 1.0}, 0});
    const auto zero_values = rcm::extract_cc(degenerate);
    REQUIRE(zero_values.size() == 1);
    CHECK(zero_values[0] == 0.0);
  }
  SUBCASE("no pairs at n = 2") {
    const auto none = rcm::extract_cc(rcm::compute_spectrum(FirstRow{{1.0, 2.0}, 0}));
    CHECK(none.empty());
  }
}

TEST_CASE("cc values equal twice the imaginary part, exactly") {
  for (int n : {3, 5, 8, 100}) {
    EnsembleConfig config{n, 1.0, 10, 808};
    for (std::int64_t k = 0; k < config.realization_count; ++k) {
      const auto spectrum = rcm::compute_spectrum(rcm::sample_first_row(config, k));
      const auto values = rcm::extract_cc(spectrum);
      const auto pairs = spectrum.conjugate_pairs();
      REQUIRE(values.size() == pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(values[i] == 2.0 * std::abs(spectrum.eigenvalue(pairs[i].first).imag()));
      }
    }
  }
}

TEST_CASE("rc extraction at n = 3") {
  const double a2 = -0.6, a3 = 1.1;
  const auto spectrum = rcm::compute_spectrum(FirstRow{{0.4, a2, a3}, 0});
  const std::complex<double> closed{1.5 * (a2 + a3), std::sqrt(3.0) / 2.0 * (a2 - a3)};

  SUBCASE("one-per-realization matches the closed form") {
    rcm::Substream selector(99, 0, rcm::kDomainPairSelection);
    const auto values = rcm::extract_rc(spectrum, PairingPolicy::OnePerRealization, &selector);
    REQUIRE(values.size() == 1);
    CHECK(values[0] == doctest::Approx(std::abs(closed)).epsilon(1e-12));
  }
  SUBCASE("the two complex partners give equal distances") {
    const auto values = rcm::extract_rc(spectrum, PairingPolicy::AllPairs);
    REQUIRE(values.size() == 2);
    CHECK(values[0] == values[1]);
  }
  SUBCASE("coincident spectrum gives zero spacing") {
    const auto degenerate = rcm::compute_spectrum(FirstRow{{1.0, 0.0, 0.0}, 0});
    const auto values = rcm::extract_rc(degenerate, PairingPolicy::AllPairs);
    for (double v : values) {
      CHECK(v == 0.0);
    }
  }
  SUBCASE("selector is required for one-per-realization") {
    CHECK_THROWS_AS(rcm::extract_rc(spectrum, PairingPolicy::OnePerRealization),
                    std::invalid_argument);
  }
  SUBCASE("no complex eigenvalues at n = 2") {
    const auto none = rcm::extract_rc(rcm::compute_spectrum(FirstRow{{1.0, 2.0}, 0}),
                                      PairingPolicy::AllPairs);
    CHECK(none.empty());
  }
}

TEST_CASE("generic extraction skips self and conjugate partners") {
  SUBCASE("one conjugate pair is not enough") {
    const auto spectrum = rcm::compute_spectrum(FirstRow{{1.0, 2.0, 3.0, 4.0}, 0});
    CHECK(rcm::extract_generic(spectrum, PairingPolicy::AllPairs).empty());
  }
  SUBCASE("all admissible distances at n = 6") {
    EnsembleConfig config{6, 1.0, 1, 21};
    const auto spectrum = rcm::compute_spectrum(rcm::sample_first_row(config, 0));
    const auto pairs = spectrum.conjugate_pairs();
    REQUIRE(pairs.size() == 2);
    const auto values = rcm::extract_generic(spectrum, PairingPolicy::AllPairs);
    REQUIRE(values.size() == 4);  // 2 * P * (P - 1) with P = 2

    // Enumerate the four cross-pair combinations directly.
    std::vector<double> expected;
    for (int j : {pairs[0].first, pairs[0].second}) {
      for (int k : {pairs[1].first, pairs[1].second}) {
        expected.push_back(std::abs(spectrum.eigenvalue(j) - spectrum.eigenvalue(k)));
      }
    }
    auto sorted_values = values;
    std::sort(sorted_values.begin(), sorted_values.end());
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_values == expected);
  }
  SUBCASE("one-per-realization draws admissible distances") {
    EnsembleConfig config{11, 1.0, 200, 3131};
    for (std::int64_t k = 0; k < config.realization_count; ++k) {
      const auto spectrum = rcm::compute_spectrum(rcm::sample_first_row(config, k));
      rcm::Substream selector(config.master_seed, k, rcm::kDomainPairSelection);
      const auto values =
          rcm::extract_generic(spectrum, PairingPolicy::OnePerRealization, &selector);
      REQUIRE(values.size() == 1);
      const auto all = rcm::extract_generic(spectrum, PairingPolicy::AllPairs);
      CHECK(std::find(all.begin(), all.end(), values[0]) != all.end());
    }
  }
  SUBCASE("degenerate spectra keep zero distances") {
    const auto spectrum = rcm::compute_spectrum(FirstRow{{2.0, 0, 0, 0, 0, 0}, 0});
    for (double v : rcm::extract_generic(spectrum, PairingPolicy::AllPairs)) {
      CHECK(v == 0.0);
    }
  }
}

TEST_CASE("unit-mean normalization") {
  const auto sample = rcm::normalize_to_unit_mean(SpacingKind::Cc, {2.0, 4.0, 6.0});
  CHECK(sample.values == std::vector<double>{0.5, 1.0, 1.5});
  CHECK(sample.empirical_mean == 4.0);
  CHECK(sample.normalized);

  SUBCASE("already unit-mean stays unchanged") {
    const auto again = rcm::normalize_to_unit_mean(SpacingKind::Cc, sample.values);
    CHECK(again.values == sample.values);
    CHECK(again.empirical_mean == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("mean is one to machine precision on random samples") {
    rcm::Substream stream(5150, 0, 0);
    std::vector<double> values;
    for (int i = 0; i < 10000; ++i) {
      values.push_back(std::abs(stream.next_gaussian()) + 0.1);
    }
    const auto normalized = rcm::normalize_to_unit_mean(SpacingKind::Generic, values);
    long double sum = 0.0L;  // high-precision measurement of the stored values
    for (double v : normalized.values) {
      sum += v;
    }
    const auto mean = static_cast<double>(sum / normalized.values.size());
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("degenerate input is rejected") {
    CHECK_THROWS_AS(rcm::normalize_to_unit_mean(SpacingKind::Cc, {}), std::domain_error);
    CHECK_THROWS_AS(rcm::normalize_to_unit_mean(SpacingKind::Cc, {0.0, 0.0}), std::domain_error);
  }
}

TEST_CASE("cc ensemble mean approaches the analytic half-normal mean") {
  EnsembleConfig config{3, 1.0, 100000, 24601};
  std::vector<double> values;
  for (std::int64_t k = 0; k < config.realization_count; ++k) {
    const auto spacing = rcm::extract_cc(rcm::compute_spectrum(rcm::sample_first_row(config, k)));
    values.insert(values.end(), spacing.begin(), spacing.end());
  }
  const auto sample = rcm::normalize_to_unit_mean(SpacingKind::Cc, values);
  CHECK(sample.empirical_mean == doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(0.02));
}

TEST_CASE("ks distance") {
  const auto law = SpacingLaw::make(LawKind::CcNorm);

  SUBCASE("exact quantiles sit within half a step") {
    const int n = 500;
    std::vector<double> values;
    for (int i = 1; i <= n; ++i) {
      values.push_back(inverse_cdf(law, (i - 0.5) / n));
    }
    rcm::SpacingSample sample;
    sample.kind = SpacingKind::Cc;
    sample.values = values;
    sample.normalized = true;
    sample.empirical_mean = 1.0;
    CHECK(rcm::ks_distance(sample, law) <= 0.5 / n + 1e-6);
  }
  SUBCASE("normalization mismatch is rejected") {
    auto sample = rcm::normalize_to_unit_mean(SpacingKind::Cc, {1.0, 2.0});
    CHECK_THROWS_AS(rcm::ks_distance(sample, SpacingLaw::make(LawKind::CcRaw, 1.0)),
                    std::invalid_argument);
    sample.normalized = false;
    CHECK_THROWS_AS(rcm::ks_distance(sample, law), std::invalid_argument);
  }
  SUBCASE("empty sample is rejected") {
    rcm::SpacingSample empty;
    empty.normalized = true;
    CHECK_THROWS_AS(rcm::ks_distance(empty, law), std::domain_error);
  }
  SUBCASE("the gaussian and wigner laws are clearly distinguishable") {
    const auto wigner = SpacingLaw::make(LawKind::Wigner);
    rcm::Substream stream(8888, 0, rcm::kDomainLawSampling);
    std::vector<double> values;
    for (int i = 0; i < 2000; ++i) {
      values.push_back(inverse_cdf(wigner, stream.next_uniform()));
    }
    rcm::SpacingSample sample;
    sample.kind = SpacingKind::Generic;
    sample.values = values;
    sample.normalized = true;
    sample.empirical_mean = 1.0;
    CHECK(rcm::ks_distance(sample, law) > 0.1);
    CHECK(rcm::ks_distance(sample, wigner) < 0.05);
  }
}

TEST_CASE("ks self-test: law-distributed draws pass at the 1% level") {
  const int trials = 100;
  const int n = 400;
  const double critical = rcm::ks_critical_value(n, 0.01);
  const std::vector<std::pair<LawKind, double>> laws = {
      {LawKind::CcNorm, 1.0}, {LawKind::RcNorm, 1.0}, {LawKind::Wigner, 1.0},
      {LawKind::CcRaw, 1.0},  {LawKind::RcRaw, 1.0},
  };
  for (const auto& [kind, a] : laws) {
    CAPTURE(rcm::law_name(kind));
    const auto law = SpacingLaw::make(kind, a);
    int passes = 0;
    for (int trial = 0; trial < trials; ++trial) {
      rcm::Substream stream(777, static_cast<std::uint64_t>(trial), rcm::kDomainLawSampling);
      rcm::SpacingSample sample;
      sample.kind = SpacingKind::Cc;
      sample.normalized = rcm::law_is_normalized(kind);
      sample.empirical_mean = 1.0;
      for (int i = 0; i < n; ++i) {
        sample.values.push_back(inverse_cdf(law, stream.next_uniform()));
      }
      if (rcm::ks_distance(sample, law) < critical) {
        ++passes;
      }
    }
    CHECK(passes >= 98);
  }
}

TEST_CASE("histogram tracks the law within multinomial noise") {
  EnsembleConfig config{3, 1.0, 10000, 1414};
  std::vector<double> values;
  for (std::int64_t k = 0; k < config.realization_count; ++k) {
    const auto v = rcm::extract_cc(rcm::compute_spectrum(rcm::sample_first_row(config, k)));
    values.insert(values.end(), v.begin(), v.end());
  }
  const auto sample = rcm::normalize_to_unit_mean(SpacingKind::Cc, values);
  const auto histogram = rcm::build_histogram(sample, 20);
  const auto law = SpacingLaw::make(LawKind::CcNorm);
  const auto n = static_cast<double>(sample.values.size());
  for (std::size_t b = 0; b < histogram.density.size(); ++b) {
    const double lo = histogram.edges[b];
    const double hi = histogram.edges[b + 1];
    const double p = law.cdf(hi) - law.cdf(lo);
    const double expected_density = p / (hi - lo);
    const double sigma = std::sqrt(std::max(p * (1.0 - p), 1e-12) * n) / (n * (hi - lo));
    CHECK(std::abs(histogram.density[b] - expected_density) < 5.0 * sigma + 1e-9);
  }
}

TEST_CASE("histograms") {
  SUBCASE("single bin of identical values") {
    rcm::SpacingSample sample = rcm::make_raw_sample(SpacingKind::Cc, std::vector<double>(100, 1.0));
    const auto histogram = rcm::build_histogram(sample, 1);
    REQUIRE(histogram.density.size() == 1);
    const double width = histogram.edges[1] - histogram.edges[0];
    CHECK(histogram.density[0] == doctest::Approx(1.0 / width).epsilon(1e-12));
  }
  SUBCASE("uniform grid is nearly flat") {
    std::vector<double> values;
    for (int i = 0; i < 10000; ++i) {
      values.push_back((i + 0.5) / 10000.0);
    }
    const auto histogram = rcm::build_histogram(rcm::make_raw_sample(SpacingKind::Cc, values), 10);
    for (double d : histogram.density) {
      CHECK(d == doctest::Approx(1.0).epsilon(0.01));
    }
  }
  SUBCASE("density integrates to one") {
    EnsembleConfig config{3, 1.0, 5000, 99991};
    std::vector<double> values;
    for (std::int64_t k = 0; k < config.realization_count; ++k) {
      const auto v = rcm::extract_cc(rcm::compute_spectrum(rcm::sample_first_row(config, k)));
      values.insert(values.end(), v.begin(), v.end());
    }
    const auto histogram = rcm::build_histogram(rcm::make_raw_sample(SpacingKind::Cc, values), 37);
    double mass = 0.0;
    for (std::size_t b = 0; b < histogram.density.size(); ++b) {
      mass += histogram.density[b] * (histogram.edges[b + 1] - histogram.edges[b]);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("input validation") {
    rcm::SpacingSample empty;
    CHECK_THROWS_AS(rcm::build_histogram(empty, 10), std::domain_error);
    const auto sample = rcm::make_raw_sample(SpacingKind::Cc, {1.0});
    CHECK_THROWS_AS(rcm::build_histogram(sample, 0), std::invalid_argument);
  }
}
