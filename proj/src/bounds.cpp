#include "mimofbl/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mimofbl/qfunc.hpp"

namespace mimofbl {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

RatePoint infeasible_point(const SchemeStats& stats, const OperatingPoint& op,
                           BoundKind kind) {
  RatePoint out;
  out.blocklength = op.blocklength;
  out.kind = kind;
  out.scheme = stats.scheme;
  out.feasible = false;
  out.rate = kNan;
  out.log2_m = kNan;
  return out;
}

RatePoint from_log2_m(const SchemeStats& stats, const OperatingPoint& op,
                      BoundKind kind, double log2_m) {
  RatePoint out;
  out.blocklength = op.blocklength;
  out.kind = kind;
  out.scheme = stats.scheme;
  out.log2_m = log2_m;
  out.rate = log2_m / op.blocklength;
  return out;
}

}  // namespace

double berry_esseen_b(const SchemeStats& stats) {
  if (stats.dispersion <= 0.0) return 0.0;
  return 6.0 * stats.third_abs_moment / std::pow(stats.dispersion, 1.5);
}

RatePoint normal_approx_rate(const SchemeStats& stats, const OperatingPoint& op) {
  const double n = op.blocklength;
  const double log2_m =
      n * stats.capacity -
      std::sqrt(n * stats.dispersion) * q_inv(op.epsilon);
  return from_log2_m(stats, op, BoundKind::NormalApprox, log2_m);
}

RatePoint achievability_asymptotic(const SchemeStats& stats,
                                   const OperatingPoint& op) {
  RatePoint out = normal_approx_rate(stats, op);
  out.kind = BoundKind::AchievabilityAsymptotic;
  return out;
}

RatePoint converse_finite(const SchemeStats& stats, const OperatingPoint& op,
                          double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("converse_finite: delta must be positive");
  }
  const double n = op.blocklength;
  const double b = berry_esseen_b(stats);
  const double shifted_eps = op.epsilon + (b + delta) / std::sqrt(n);
  if (!(shifted_eps < 1.0)) {
    return infeasible_point(stats, op, BoundKind::ConverseFinite);
  }
  const double log2_m = n * stats.capacity -
                        std::sqrt(n * stats.dispersion) * q_inv(shifted_eps) -
                        std::log2(delta) + 0.5 * std::log2(n);
  return from_log2_m(stats, op, BoundKind::ConverseFinite, log2_m);
}

RatePoint achievability_finite(const SchemeStats& stats,
                               const OperatingPoint& op,
                               const KappaPolicy& policy) {
  const double n = op.blocklength;
  const double b = berry_esseen_b(stats);
  const double tau = b / std::sqrt(n);
  const double shifted_eps = op.epsilon - 2.0 * tau;
  // tau = 0 means a dispersionless channel; the kappa-beta construction
  // needs tau > 0, so that degenerate case is reported infeasible too.
  if (!(shifted_eps > 0.0) || !(tau > 0.0)) {
    return infeasible_point(stats, op, BoundKind::AchievabilityFinite);
  }
  const double log2_kappa = policy.kind == KappaPolicy::Kind::Tau
                                ? std::log2(tau)
                                : policy.custom_log2_kappa;
  const double log2_m = n * stats.capacity -
                        std::sqrt(n * stats.dispersion) * q_inv(shifted_eps) +
                        log2_kappa;
  return from_log2_m(stats, op, BoundKind::AchievabilityFinite, log2_m);
}

TdErrorAggregate td_error_aggregate(int m, double epsilon) {
  if (m < 1) {
    throw std::invalid_argument("td_error_aggregate: m must be >= 1");
  }
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("td_error_aggregate: epsilon must be in (0,1)");
  }
  TdErrorAggregate out;
  out.exact = -std::expm1(m * std::log1p(-epsilon));
  out.approx = m * epsilon;
  if (m == 1) {
    out.qinv_rel_err = 0.0;
  } else if (out.approx >= 1.0) {
    out.qinv_rel_err = kNan;
  } else {
    const double q_all = q_inv(out.approx);
    out.qinv_rel_err = std::abs(q_inv(epsilon) - q_all) / q_all;
  }
  return out;
}

ValidityDiagnostics na_validity(const SchemeStats& stats,
                                const OperatingPoint& op) {
  const double n = op.blocklength;
  const double b = berry_esseen_b(stats);
  ValidityDiagnostics out;
  out.berry_esseen_ratio = b / std::sqrt(n);
  const double lead =
      n * stats.capacity - std::sqrt(n * stats.dispersion) * q_inv(op.epsilon);
  out.dominance_ratio = lead / std::log2(n);  // +-inf at n = 1
  out.feasible = op.epsilon - 2.0 * b / std::sqrt(n) > 0.0;
  return out;
}

}  // namespace mimofbl
