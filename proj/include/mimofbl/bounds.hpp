#pragma once

#include "mimofbl/channel.hpp"
#include "mimofbl/info_density.hpp"

namespace mimofbl {

enum class BoundKind {
  NormalApprox,
  AchievabilityAsymptotic,
  AchievabilityFinite,
  ConverseFinite,
};

// One point of a rate-versus-blocklength curve. When the finite-n
// construction is not evaluable at this blocklength, feasible is false and
// rate/log2_m are NaN; sweeps cross the feasibility boundary legitimately,
// so this is a value, not an error.
struct RatePoint {
  int blocklength = 0;
  double rate = 0.0;    // bits per channel use
  double log2_m = 0.0;  // total bits, n * rate
  BoundKind kind = BoundKind::NormalApprox;
  Scheme scheme = Scheme::ST;
  bool feasible = true;
};

// The kappa-bound constant only exists; its value is a policy. Tau plugs in
// log2(tau) with tau = B/sqrt(n); Custom substitutes a caller-supplied
// log2(kappa).
struct KappaPolicy {
  enum class Kind { Tau, Custom } kind = Kind::Tau;
  double custom_log2_kappa = 0.0;

  static KappaPolicy tau() { return {}; }
  static KappaPolicy custom(double log2_kappa) {
    return {Kind::Custom, log2_kappa};
  }
};

// Numerical diagnostics for when the two-term expansion can be trusted:
// the leading term must dominate log n and the Berry-Esseen correction
// must be small against epsilon.
struct ValidityDiagnostics {
  double berry_esseen_ratio = 0.0;  // B / sqrt(n)
  double dominance_ratio = 0.0;     // (nC - sqrt(nV) q_inv(eps)) / log2(n)
  bool feasible = true;             // eps - 2B/sqrt(n) > 0
};

// B = 6 theta / V^(3/2); 0 for a dispersionless channel.
double berry_esseen_b(const SchemeStats& stats);

// rate = C - sqrt(V/n) q_inv(eps).
RatePoint normal_approx_rate(const SchemeStats& stats, const OperatingPoint& op);

// The achievability bound with the tau and kappa terms dropped; coincides
// with the normal approximation by construction, kept as its own kind so
// curve emitters can label it.
RatePoint achievability_asymptotic(const SchemeStats& stats,
                                   const OperatingPoint& op);

// log2 M <= nC - sqrt(nV) q_inv(eps + (B+delta)/sqrt(n)) - log2(delta)
//          + (1/2) log2(n), needing eps + (B+delta)/sqrt(n) < 1.
RatePoint converse_finite(const SchemeStats& stats, const OperatingPoint& op,
                          double delta);

// log2 M >= nC - sqrt(nV) q_inv(eps - 2B/sqrt(n)) + log2(kappa_tau),
// needing eps - 2B/sqrt(n) > 0, with tau = B/sqrt(n).
RatePoint achievability_finite(const SchemeStats& stats,
                               const OperatingPoint& op,
                               const KappaPolicy& policy);

struct TdErrorAggregate {
  double exact = 0.0;         // 1 - (1-eps)^m
  double approx = 0.0;        // m * eps
  double qinv_rel_err = 0.0;  // |q_inv(eps) - q_inv(m eps)| / q_inv(m eps)
};

// How much the per-link error budget shifts the q_inv argument when m
// independent codewords must all decode. qinv_rel_err is NaN when
// m*eps >= 1 (no quantile to compare against).
TdErrorAggregate td_error_aggregate(int m, double epsilon);

ValidityDiagnostics na_validity(const SchemeStats& stats,
                                const OperatingPoint& op);

}  // namespace mimofbl
