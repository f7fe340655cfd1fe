#include "mimofbl/compare.hpp"

#include <cmath>
#include <stdexcept>

#include "mimofbl/qfunc.hpp"

namespace mimofbl {
namespace {

// Both schemes reduce to q_func(Delta * sqrt(product) * ln2) with
// product = m*n (ST) or n (TD). Keeping one shared expression makes the
// mn-exchange identity exact in floating point, not just analytically.
double q_argument(double delta, double product) {
  return delta * std::sqrt(product) * kLn2;
}

double scheme_product(const SystemConfig& cfg, int blocklength, Scheme scheme) {
  if (blocklength < 1) {
    throw std::invalid_argument("error_probability: blocklength must be >= 1");
  }
  const double n = blocklength;
  return scheme == Scheme::ST ? static_cast<double>(cfg.dof()) * n : 1.0 * n;
}

double delta_of(const SystemConfig& cfg, double per_link_rate) {
  if (per_link_rate < 0.0) {
    throw std::invalid_argument("per-link rate must be nonnegative");
  }
  return std::log2(1.0 + cfg.snr) - per_link_rate;
}

}  // namespace

double normalized_rate(const SystemConfig& cfg, const OperatingPoint& op,
                       Scheme scheme) {
  const double product = scheme_product(cfg, op.blocklength, scheme);
  return std::log2(1.0 + cfg.snr) -
         q_inv(op.epsilon) * kLog2E / std::sqrt(product);
}

double error_probability(const SystemConfig& cfg, int blocklength,
                         double per_link_rate, Scheme scheme) {
  const double delta = delta_of(cfg, per_link_rate);
  return q_func(q_argument(delta, scheme_product(cfg, blocklength, scheme)));
}

double error_probability_ln(const SystemConfig& cfg, int blocklength,
                            double per_link_rate, Scheme scheme) {
  const double delta = delta_of(cfg, per_link_rate);
  return q_func_ln(q_argument(delta, scheme_product(cfg, blocklength, scheme)));
}

ComparisonPoint comparison_point(const SystemConfig& cfg, int blocklength,
                                 double per_link_rate) {
  ComparisonPoint out;
  out.cfg = cfg;
  out.blocklength = blocklength;
  out.per_link_rate = per_link_rate;
  out.delta = delta_of(cfg, per_link_rate);
  out.eps_st = error_probability(cfg, blocklength, per_link_rate, Scheme::ST);
  out.eps_td = error_probability(cfg, blocklength, per_link_rate, Scheme::TD);
  return out;
}

ExchangeSolution solve_exchange(const SystemConfig& cfg, double per_link_rate,
                                double target_eps,
                                ExchangeSolution::Variable solve_for,
                                int fixed_other) {
  if (!(target_eps > 0.0) || !(target_eps < 1.0)) {
    throw std::domain_error("solve_exchange: target error must be in (0,1)");
  }
  if (fixed_other < 1) {
    throw std::domain_error("solve_exchange: fixed dimension must be >= 1");
  }
  const double delta = delta_of(cfg, per_link_rate);
  if (!(delta > 0.0)) {
    throw std::domain_error(
        "solve_exchange: per-link rate at or above capacity, unsatisfiable");
  }
  const double fixed = fixed_other;
  const auto eps_at = [&](long long v) {
    return q_func(q_argument(delta, static_cast<double>(v) * fixed));
  };

  long long v = 1;
  const double q_target = q_inv(target_eps);
  if (q_target > 0.0) {
    const double need = q_target / (delta * kLn2);
    v = std::max(1LL, static_cast<long long>(std::ceil(need * need / fixed)));
    // The closed form positions v up to rounding; settle minimality against
    // the actual floating-point error values.
    for (int guard = 0; guard < 1000 && v > 1 && eps_at(v - 1) <= target_eps;
         ++guard) {
      --v;
    }
    for (int guard = 0; guard < 1000 && eps_at(v) > target_eps; ++guard) {
      ++v;
    }
    if (eps_at(v) > target_eps) {
      throw std::logic_error("solve_exchange: failed to bracket the solution");
    }
  }
  ExchangeSolution out;
  out.solved_for = solve_for;
  out.value = static_cast<int>(v);
  out.achieved_eps = eps_at(v);
  return out;
}

}  // namespace mimofbl
