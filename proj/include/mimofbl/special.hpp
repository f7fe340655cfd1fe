#pragma once

namespace mimofbl {

// Exponentially scaled modified Bessel function e^{-x} I_0(x), x >= 0.
// Power series below x = 18, asymptotic series above; both converge to
// machine precision on their side of the split. Needed for the
// noncentral-chi-square density that drives the third-moment
// quadrature; scaled so the density can be assembled without overflow
// at small per-antenna SNR.
double bessel_i0e(double x);

}  // namespace mimofbl
