#pragma once

#include "mimofbl/channel.hpp"
#include "mimofbl/info_density.hpp"

namespace mimofbl {

// Closed-form scheme comparison at the high-SNR surrogate statistics.
// Everything here flows through Delta = log2(1+rho) - per_link_rate and the
// product m*n: spatiotemporal coding reaches the same error with 1/m of the
// blocklength.

struct ComparisonPoint {
  SystemConfig cfg;
  int blocklength = 0;
  double per_link_rate = 0.0;  // bits/use/link
  double delta = 0.0;          // log2(1+rho) - per_link_rate
  double eps_st = 0.0;
  double eps_td = 0.0;
};

struct ExchangeSolution {
  enum class Variable { N, M } solved_for = Variable::N;
  int value = 0;          // minimal integer meeting the target
  double achieved_eps = 0.0;
};

// Per-link normal-approximation rate at target error eps:
//   TD: log2(1+rho) - (1/sqrt(n)) q_inv(eps) log2(e)
//   ST: log2(1+rho) - (1/sqrt(m n)) q_inv(eps) log2(e)
double normalized_rate(const SystemConfig& cfg, const OperatingPoint& op,
                       Scheme scheme);

// q_func(Delta * sqrt(mn) * ln2) for ST, q_func(Delta * sqrt(n) * ln2) for
// TD. Delta <= 0 (rate at or above capacity) yields >= 0.5.
double error_probability(const SystemConfig& cfg, int blocklength,
                         double per_link_rate, Scheme scheme);

// Natural log of the same probability; stays meaningful past 1e-308.
double error_probability_ln(const SystemConfig& cfg, int blocklength,
                            double per_link_rate, Scheme scheme);

ComparisonPoint comparison_point(const SystemConfig& cfg, int blocklength,
                                 double per_link_rate);

// Minimal integer n (dof m fixed from cfg) or m (blocklength fixed_other)
// with ST error <= target_eps. Throws when Delta <= 0 (no finite solution)
// or target_eps is not a probability.
ExchangeSolution solve_exchange(const SystemConfig& cfg, double per_link_rate,
                                double target_eps,
                                ExchangeSolution::Variable solve_for,
                                int fixed_other);

}  // namespace mimofbl
