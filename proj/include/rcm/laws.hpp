#pragma once

#include <string>
#include <vector>

namespace rcm {

// Modified Bessel function of the first kind, order 0. Power series below
// x = 20, asymptotic expansion above; relative error stays under 1e-12 on
// [0, 500]. Throws std::domain_error for negative x.
double bessel_i0(double x);

// exp(-x) * I0(x); safe for arguments far beyond the overflow point of I0
// itself. The spacing densities pair every I0 with a stronger Gaussian
// factor, so they evaluate through this form.
double bessel_i0_scaled(double x);

// Gauss hypergeometric series sum_k [(a)_k (b)_k / ((c)_k k!)] x^k for
// |x| < 1; converges geometrically away from the unit circle.
double gauss_2f1(double a, double b, double c, double x);

// The constant 2F1(3/4, 5/4; 1; 1/4) = 1.31112... entering the mean
// real-complex spacing.
double rc_mean_constant();

// Mean real-complex spacing (3/8) sqrt(pi / A) * rc_mean_constant().
double mean_spacing_rc(double scale_a);

// The five spacing laws. "Raw" laws carry the ensemble scale A; normalized
// laws are parameter-free with unit mean.
//   CcRaw   : sqrt(2A/pi) exp(-A x^2 / 2)           (half-normal)
//   CcNorm  : (2/pi) exp(-x^2 / pi)
//   RcRaw   : (4A/sqrt(3)) x exp(-(4A/3) x^2) I0((2A/3) x^2)
//   RcNorm  : (3 sqrt(3) pi / 16) c^2 x exp(-(3pi/16) c^2 x^2) I0((3pi/32) c^2 x^2)
//   Wigner  : (pi x / 2) exp(-pi x^2 / 4)
enum class LawKind { CcRaw, CcNorm, RcRaw, RcNorm, Wigner };

bool law_is_normalized(LawKind kind);
std::string law_name(LawKind kind);

// A spacing law with density in closed form and CDF by adaptive quadrature
// cached on a grid at construction. Evaluation afterwards is read-only and
// safe for concurrent use.
class SpacingLaw {
 public:
  static SpacingLaw make(LawKind kind, double scale_a = 1.0);

  LawKind kind() const { return kind_; }
  double scale_a() const { return scale_a_; }

  double density(double x) const;  // throws std::domain_error for x < 0
  double cdf(double x) const;      // absolute error < 1e-8, clamped to [0, 1]
  double mean() const { return mean_; }

  // Integration cutoff: density below 1e-16 of its peak beyond this point.
  double upper_limit() const { return upper_; }

 private:
  SpacingLaw(LawKind kind, double scale_a);

  LawKind kind_;
  double scale_a_;
  double upper_ = 0.0;
  double mean_ = 0.0;
  std::vector<double> grid_cdf_;  // cumulative integral at k * step_
  double step_ = 0.0;
};

// Variant of the raw real-complex density whose exponential factor does not
// carry the ensemble scale: (4A/sqrt(3)) x exp(-(4/3) x^2) I0((2A/3) x^2).
// Not normalizable for A >= 2; kept so run reports can quantify how the two
// exponent conventions compare against data.
double rc_raw_density_unscaled_exponent(double scale_a, double x);

}  // namespace rcm
