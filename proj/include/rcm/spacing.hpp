#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcm/laws.hpp"
#include "rcm/rng.hpp"
#include "rcm/spectral.hpp"

namespace rcm {

enum class SpacingKind { Cc, Rc, Generic };

std::string spacing_kind_name(SpacingKind kind);

// How many spacings one realization contributes. OnePerRealization draws a
// single uniformly chosen admissible spacing per spectrum, which keeps the
// sample i.i.d. and the KS critical values valid; AllPairs emits every
// admissible distance, for visual comparison only.
enum class PairingPolicy { OnePerRealization, AllPairs };

struct SpacingSample {
  SpacingKind kind = SpacingKind::Cc;
  std::vector<double> values;
  bool normalized = false;
  double empirical_mean = 0.0;  // mean of the raw values
};

SpacingSample make_raw_sample(SpacingKind kind, std::vector<double> values);

// |E_l - E_partner| once per conjugate pair, equal to 2 |Im E_l| exactly.
// Empty (not an error) when the spectrum has no pairs.
std::vector<double> extract_cc(const Spectrum& spectrum);

// |E_0 - E_l| between the leading real eigenvalue and complex eigenvalues.
// Under OnePerRealization, l is drawn uniformly from the selector stream;
// under AllPairs, every (real, complex) distance is emitted.
std::vector<double> extract_rc(const Spectrum& spectrum, PairingPolicy policy,
                               Substream* selector = nullptr);

// |E_j - E_k| over complex eigenvalues from distinct conjugate pairs
// (the partner index n - j is never an admissible k). Needs at least two
// pairs; returns empty otherwise.
std::vector<double> extract_generic(const Spectrum& spectrum, PairingPolicy policy,
                                    Substream* selector = nullptr);

// Sets the sample mean to one by dividing by it; records the original mean.
SpacingSample normalize_to_unit_mean(SpacingKind kind, const std::vector<double>& values);

// Two-sided Kolmogorov-Smirnov distance between the empirical CDF and the
// law's CDF, evaluated at the sample points with both one-sided gaps. The
// sample must be normalized exactly when the law is a normalized law.
double ks_distance(const SpacingSample& sample, const SpacingLaw& law);

// Critical KS value c(alpha) / sqrt(n) for the asymptotic two-sided test.
double ks_critical_value(std::size_t n, double alpha);

struct Histogram {
  std::vector<double> edges;          // bin_count + 1 ascending edges
  std::vector<std::int64_t> counts;
  std::vector<double> density;        // counts / (total * width)
};

// Equal-width bins over [0, max * (1 + 1e-9)].
Histogram build_histogram(const SpacingSample& sample, int bin_count);

}  // namespace rcm
