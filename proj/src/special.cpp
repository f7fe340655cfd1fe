#include "mimofbl/special.hpp"

#include <cmath>

namespace mimofbl {

double bessel_i0e(double x) {
  if (x < 0.0) x = -x;
  if (x < 18.0) {
    // I_0(x) = sum_k (x^2/4)^k / (k!)^2; all terms positive, largest
    // term ~1e6 at the split point, so no cancellation or overflow.
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 80; ++k) {
      term *= q / (static_cast<double>(k) * k);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return sum * std::exp(-x);
  }
  // I_0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k),
  // truncated at the smallest term (error ~e^{-2x} < 1e-15 here).
  double term = 1.0;
  double sum = 1.0;
  double prev = 1.0;
  for (int k = 1; k <= 30; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= odd * odd / (8.0 * x * k);
    if (term >= prev) break;
    sum += term;
    prev = term;
    if (term < 1e-17 * sum) break;
  }
  return sum / std::sqrt(6.283185307179586477 * x);
}

}  // namespace mimofbl
