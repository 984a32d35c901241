#pragma once

#include <functional>

namespace ampbound {

// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
// Bisects until the local K15-G7 discrepancy meets the length-proportional
// share of abs_tol. Throws EstimationError if the interval budget is spent.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

}  // namespace ampbound
