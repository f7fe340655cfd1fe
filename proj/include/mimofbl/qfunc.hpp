#pragma once

namespace mimofbl {

// Gaussian Q-function: upper tail P[Z >= x] of the standard normal.
// Throughout this project the tail function is named q_func / q_inv
// rather than Phi, because the normal-approximation literature writes
// the same symbol for the CDF and for its complement and that is a
// classic source of sign errors.
//
// For x > 8 the value is produced through the log-domain tail so the
// result never underflows to a negative or garbage value; beyond
// x ~ 38.5 the true probability is below the smallest positive double
// and 0 is returned.
double q_func(double x);

// Natural log of q_func(x), finite for all finite x. Stable deep into
// the tail (x = 1e4 gives about -5e7, not -inf), which is what the
// sub-1e-300 error-probability comparisons run on.
double q_func_ln(double x);

// Inverse of q_func on (0,1). q_func(q_inv(p)) recovers p to at least
// 10 significant digits; q_inv(1-p) = -q_inv(p). Implemented as
// bracketed bisection on the log-domain tail followed by a Newton
// polish. Throws std::domain_error outside (0,1).
double q_inv(double p);

// Standard normal density, used by the Newton polish and by tests.
double gauss_pdf(double x);

}  // namespace mimofbl
