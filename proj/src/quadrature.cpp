#include "rcm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace rcm {
namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double refined = left + right;
  const double err = (refined - whole) / 15.0;
  if (depth <= 0 || std::abs(err) <= tol) {
    return refined + err;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
  }
  if (lo == hi) {
    return 0.0;
  }
  const double fa = f(lo);
  const double fm = f(0.5 * (lo + hi));
  const double fb = f(hi);
  const double whole = simpson(fa, fm, fb, hi - lo);
  return adaptive_step(f, lo, hi, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace rcm
