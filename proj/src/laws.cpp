#include "rcm/laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rcm/quadrature.hpp"

namespace rcm {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSeriesAsymptoticSplit = 20.0;
constexpr int kCdfGridSize = 2048;
constexpr double kCdfSegmentTol = 1e-13;

double i0_series(double x) {
  // All terms positive: no cancellation, plain summation to convergence.
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-17) {
      break;
    }
  }
  return sum;
}

double i0_scaled_asymptotic(double x) {
  // exp(-x) I0(x) ~ (1/sqrt(2 pi x)) sum_k ((2k-1)!!)^2 / (k! (8x)^k);
  // truncated when terms stop improving (well past 1e-14 for x > 20).
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (8.0 * k * x);
    if (next >= term) {
      break;  // divergent tail of the asymptotic series
    }
    term = next;
    sum += term;
    if (term < sum * 1e-17) {
      break;
    }
  }
  return sum / std::sqrt(2.0 * kPi * x);
}

void check_nonnegative(double x, const char* where) {
  if (x < 0.0) {
    throw std::domain_error(std::string(where) + ": argument must be nonnegative");
  }
}

}  // namespace

double bessel_i0(double x) {
  check_nonnegative(x, "bessel_i0");
  if (x <= kSeriesAsymptoticSplit) {
    return i0_series(x);
  }
  return std::exp(x) * i0_scaled_asymptotic(x);
}

double bessel_i0_scaled(double x) {
  check_nonnegative(x, "bessel_i0_scaled");
  if (x <= kSeriesAsymptoticSplit) {
    return std::exp(-x) * i0_series(x);
  }
  return i0_scaled_asymptotic(x);
}

double gauss_2f1(double a, double b, double c, double x) {
  if (std::abs(x) >= 1.0) {
    throw std::domain_error("gauss_2f1: series requires |x| < 1");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 10000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) {
      return sum;
    }
  }
  throw std::runtime_error("gauss_2f1: series did not converge");
}

double rc_mean_constant() {
  static const double value = gauss_2f1(0.75, 1.25, 1.0, 0.25);
  return value;
}

double mean_spacing_rc(double scale_a) {
  if (!(scale_a > 0.0)) {
    throw std::domain_error("mean_spacing_rc: scale must be positive");
  }
  return 0.375 * std::sqrt(kPi / scale_a) * rc_mean_constant();
}

bool law_is_normalized(LawKind kind) {
  return kind == LawKind::CcNorm || kind == LawKind::RcNorm || kind == LawKind::Wigner;
}

std::string law_name(LawKind kind) {
  switch (kind) {
    case LawKind::CcRaw:
      return "cc_raw";
    case LawKind::CcNorm:
      return "cc_norm";
    case LawKind::RcRaw:
      return "rc_raw";
    case LawKind::RcNorm:
      return "rc_norm";
    case LawKind::Wigner:
      return "wigner";
  }
  throw std::logic_error("law_name: unknown kind");
}

SpacingLaw SpacingLaw::make(LawKind kind, double scale_a) {
  if (!law_is_normalized(kind) && !(scale_a > 0.0)) {
    throw std::domain_error("SpacingLaw: raw laws require a positive scale");
  }
  return SpacingLaw(kind, law_is_normalized(kind) ? 1.0 : scale_a);
}

SpacingLaw::SpacingLaw(LawKind kind, double scale_a) : kind_(kind), scale_a_(scale_a) {
  // Find the truncation point: walk outward from the bulk until the density
  // drops below 1e-16 of its peak. All five densities decay like a Gaussian,
  // so the tail mass beyond that point is negligible against the 1e-8 CDF
  // error budget.
  double peak = density(0.0);
  double x = 1.0 / std::sqrt(scale_a_);
  for (double trial = 0.0; trial <= x * 4.0; trial += x / 16.0) {
    peak = std::max(peak, density(trial));
  }
  while (density(x) > 1e-16 * peak) {
    x *= 1.25;
  }
  upper_ = x;
  step_ = upper_ / kCdfGridSize;

  grid_cdf_.resize(kCdfGridSize + 1);
  grid_cdf_[0] = 0.0;
  const auto f = [this](double t) { return density(t); };
  for (int k = 1; k <= kCdfGridSize; ++k) {
    grid_cdf_[k] =
        grid_cdf_[k - 1] + integrate_adaptive(f, (k - 1) * step_, k * step_, kCdfSegmentTol);
  }
  mean_ = integrate_adaptive([this](double t) { return t * density(t); }, 0.0, upper_, 1e-11);
}

double SpacingLaw::density(double x) const {
  check_nonnegative(x, "SpacingLaw::density");
  const double a = scale_a_;
  const double c = rc_mean_constant();
  switch (kind_) {
    case LawKind::CcRaw:
      return std::sqrt(2.0 * a / kPi) * std::exp(-0.5 * a * x * x);
    case LawKind::CcNorm:
      return 2.0 / kPi * std::exp(-x * x / kPi);
    case LawKind::RcRaw: {
      // exp(-(4A/3)x^2) I0((2A/3)x^2) evaluated as
      // exp(-(2A/3)x^2) * [exp(-y) I0(y)] with y = (2A/3)x^2.
      const double y = 2.0 * a / 3.0 * x * x;
      return 4.0 * a / std::sqrt(3.0) * x * std::exp(-y) * bessel_i0_scaled(y);
    }
    case LawKind::RcNorm: {
      const double y = 3.0 * kPi / 32.0 * c * c * x * x;
      return 3.0 * std::sqrt(3.0) * kPi / 16.0 * c * c * x * std::exp(-y) *
             bessel_i0_scaled(y);
    }
    case LawKind::Wigner:
      return 0.5 * kPi * x * std::exp(-0.25 * kPi * x * x);
  }
  throw std::logic_error("SpacingLaw::density: unknown kind");
}

double SpacingLaw::cdf(double x) const {
  check_nonnegative(x, "SpacingLaw::cdf");
  if (x >= upper_) {
    return 1.0;
  }
  const int k = std::min(static_cast<int>(x / step_), kCdfGridSize - 1);
  const double value =
      grid_cdf_[k] + integrate_adaptive([this](double t) { return density(t); }, k * step_, x,
                                        kCdfSegmentTol);
  return std::clamp(value, 0.0, 1.0);
}

double rc_raw_density_unscaled_exponent(double scale_a, double x) {
  check_nonnegative(x, "rc_raw_density_unscaled_exponent");
  if (!(scale_a > 0.0)) {
    throw std::domain_error("rc_raw_density_unscaled_exponent: scale must be positive");
  }
  const double y = 2.0 * scale_a / 3.0 * x * x;
  return 4.0 * scale_a / std::sqrt(3.0) * x * std::exp(y - 4.0 / 3.0 * x * x) *
         bessel_i0_scaled(y);
}

}  // namespace rcm
