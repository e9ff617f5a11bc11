#pragma once

#include <functional>

namespace rcm {

// Adaptive Simpson integration with an absolute error target. Panels split
// until the Richardson estimate |S2 - S1| / 15 falls under the local share of
// the tolerance; max_depth caps recursion on pathological integrands.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol, int max_depth = 48);

}  // namespace rcm
