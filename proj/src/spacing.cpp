#include "rcm/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rcm {
namespace {

// Compensated (Neumaier) summation so the recorded mean is accurate to a few
// ulps even for very large samples; the unit-mean invariant depends on it.
double compensated_mean(const std::vector<double>& values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return (sum + compensation) / static_cast<double>(values.size());
}

}  // namespace

std::string spacing_kind_name(SpacingKind kind) {
  switch (kind) {
    case SpacingKind::Cc:
      return "cc";
    case SpacingKind::Rc:
      return "rc";
    case SpacingKind::Generic:
      return "generic";
  }
  throw std::logic_error("spacing_kind_name: unknown kind");
}

SpacingSample make_raw_sample(SpacingKind kind, std::vector<double> values) {
  SpacingSample sample;
  sample.kind = kind;
  sample.values = std::move(values);
  sample.normalized = false;
  sample.empirical_mean = sample.values.empty() ? 0.0 : compensated_mean(sample.values);
  return sample;
}

std::vector<double> extract_cc(const Spectrum& spectrum) {
  std::vector<double> out;
  for (const auto& [l, partner] : spectrum.conjugate_pairs()) {
    out.push_back(std::abs(spectrum.eigenvalue(l) - spectrum.eigenvalue(partner)));
  }
  return out;
}

std::vector<double> extract_rc(const Spectrum& spectrum, PairingPolicy policy,
                               Substream* selector) {
  const auto complex_indices = spectrum.complex_indices();
  std::vector<double> out;
  if (complex_indices.empty()) {
    return out;
  }
  if (policy == PairingPolicy::OnePerRealization) {
    if (selector == nullptr) {
      throw std::invalid_argument("extract_rc: OnePerRealization requires a selector stream");
    }
    const int l = complex_indices[selector->next_below(complex_indices.size())];
    out.push_back(std::abs(spectrum.eigenvalue(0) - spectrum.eigenvalue(l)));
    return out;
  }
  for (int real_index : spectrum.real_indices()) {
    for (int l : complex_indices) {
      out.push_back(std::abs(spectrum.eigenvalue(real_index) - spectrum.eigenvalue(l)));
    }
  }
  return out;
}

std::vector<double> extract_generic(const Spectrum& spectrum, PairingPolicy policy,
                                    Substream* selector) {
  const auto pairs = spectrum.conjugate_pairs();
  std::vector<double> out;
  if (pairs.size() < 2) {
    return out;
  }
  const auto member = [&pairs](std::size_t pair_index, std::uint64_t which) {
    return which == 0 ? pairs[pair_index].first : pairs[pair_index].second;
  };
  if (policy == PairingPolicy::OnePerRealization) {
    if (selector == nullptr) {
      throw std::invalid_argument(
          "extract_generic: OnePerRealization requires a selector stream");
    }
    // Two distinct conjugate pairs, then one member of each: uniform over
    // admissible unordered index pairs.
    const std::size_t p1 = selector->next_below(pairs.size());
    std::size_t p2 = selector->next_below(pairs.size() - 1);
    if (p2 >= p1) {
      ++p2;
    }
    const int j = member(p1, selector->next_below(2));
    const int k = member(p2, selector->next_below(2));
    out.push_back(std::abs(spectrum.eigenvalue(j) - spectrum.eigenvalue(k)));
    return out;
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      for (std::uint64_t bj = 0; bj < 2; ++bj) {
        for (std::uint64_t bk = 0; bk < 2; ++bk) {
          out.push_back(
              std::abs(spectrum.eigenvalue(member(p, bj)) - spectrum.eigenvalue(member(q, bk))));
        }
      }
    }
  }
  return out;
}

SpacingSample normalize_to_unit_mean(SpacingKind kind, const std::vector<double>& values) {
  if (values.empty()) {
    throw std::domain_error("normalize_to_unit_mean: empty sample");
  }
  const double mean = compensated_mean(values);
  if (!(mean > 0.0)) {
    throw std::domain_error("normalize_to_unit_mean: degenerate sample with zero mean");
  }
  SpacingSample sample;
  sample.kind = kind;
  sample.normalized = true;
  sample.empirical_mean = mean;
  sample.values.reserve(values.size());
  for (double v : values) {
    sample.values.push_back(v / mean);
  }
  return sample;
}

double ks_distance(const SpacingSample& sample, const SpacingLaw& law) {
  if (sample.values.empty()) {
    throw std::domain_error("ks_distance: empty sample");
  }
  if (sample.normalized != law_is_normalized(law.kind())) {
    throw std::invalid_argument(
        "ks_distance: sample normalization does not match the law (" + law_name(law.kind()) +
        ")");
  }
  std::vector<double> sorted = sample.values;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = law.cdf(sorted[i]);
    sup = std::max(sup, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
  }
  return sup;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("ks_critical_value: need n > 0 and alpha in (0, 1)");
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

Histogram build_histogram(const SpacingSample& sample, int bin_count) {
  if (bin_count < 1) {
    throw std::invalid_argument("build_histogram: bin_count must be >= 1");
  }
  if (sample.values.empty()) {
    throw std::domain_error("build_histogram: empty sample");
  }
  const double max_value = *std::max_element(sample.values.begin(), sample.values.end());
  const double upper = max_value > 0.0 ? max_value * (1.0 + 1e-9) : 1.0;
  const double width = upper / bin_count;

  Histogram histogram;
  histogram.edges.resize(bin_count + 1);
  for (int b = 0; b <= bin_count; ++b) {
    histogram.edges[b] = b * width;
  }
  histogram.counts.assign(bin_count, 0);
  for (double v : sample.values) {
    const int b = std::min(static_cast<int>(v / width), bin_count - 1);
    ++histogram.counts[b];
  }
  histogram.density.resize(bin_count);
  const double total = static_cast<double>(sample.values.size());
  for (int b = 0; b < bin_count; ++b) {
    histogram.density[b] = static_cast<double>(histogram.counts[b]) / (total * width);
  }
  return histogram;
}

}  // namespace rcm
