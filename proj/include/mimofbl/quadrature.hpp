#pragma once

#include <functional>

namespace mimofbl {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated Kronrod-Gauss difference estimate
  long evaluations = 0;
};

// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
// Subdivides until each panel meets rel_tol against the running total
// or abs_tol, whichever is looser. Integrand smoothness away from a
// finite set of kinks is assumed; callers split at known kinks.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0);

}  // namespace mimofbl
