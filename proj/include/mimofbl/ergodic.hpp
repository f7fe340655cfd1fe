#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mimofbl/channel.hpp"
#include "mimofbl/exec.hpp"
#include "mimofbl/info_density.hpp"

namespace mimofbl {

// Every Monte Carlo output carries its uncertainty and provenance.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Expectations over the channel ensemble alongside the high-SNR closed
// forms they should approach. The TD square-root dispersion is estimated
// twice: from the exact per-draw sum of sqrt(V_i) and from its quadratic
// Taylor surrogate sum (1 - (1+a_i)^-2 / 2) log2(e), so the surrogate's
// quality is measured instead of assumed.
struct ErgodicReport {
  McEstimate e_capacity;                  // bits/use
  McEstimate e_dispersion_st;             // bits^2/use
  McEstimate var_dispersion_st;           // bits^4
  McEstimate e_dispersion_td;             // bits^2/use, E[(sum sqrt(V_i))^2]
  McEstimate e_sqrt_dispersion_td;        // bits/use
  McEstimate e_sqrt_dispersion_td_taylor; // bits/use
  double high_snr_capacity = 0.0;            // m log2(1+rho)
  double high_snr_dispersion_st = 0.0;       // m log2(e)^2
  double high_snr_sqrt_dispersion_td = 0.0;  // m log2(e)
};

// Gram eigenvalues of `trials` independent channel draws. The draw
// distribution does not involve the SNR, so one ensemble serves a whole
// SNR or blocklength sweep; trial t always comes from rng stream t.
struct EigenEnsemble {
  int tx = 0;
  int rx = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> draws;  // trials x m, each descending
};

EigenEnsemble sample_eigen_ensemble(int tx, int rx, int trials,
                                    std::uint64_t seed,
                                    const ParallelFor& pf = serial_for());

ErgodicReport report_from_ensemble(const EigenEnsemble& ens, double snr);

// Ensemble average of the per-realization normal-approximation rate
// C(H) - sqrt(V_scheme(H)/n) q_inv(eps), total bits per channel use.
McEstimate rate_from_ensemble(const EigenEnsemble& ens, double snr,
                              const OperatingPoint& op, Scheme scheme);

// Deterministic for fixed (trials, seed): trial t draws from stream t, and
// reductions run in a fixed tree order.
ErgodicReport ergodic_report(const SystemConfig& cfg, int trials,
                             std::uint64_t seed,
                             const ParallelFor& pf = serial_for());

// High-SNR surrogate of the maximal achievable rate:
//   ST: m log2(1+rho) - sqrt(m/n) q_inv(eps) log2(e)
//   TD: m log2(1+rho) - (m/sqrt(n)) q_inv(eps) log2(e)
double max_achievable_rate_high_snr(const SystemConfig& cfg,
                                    const OperatingPoint& op, Scheme scheme);

McEstimate max_achievable_rate_mc(const SystemConfig& cfg,
                                  const OperatingPoint& op, Scheme scheme,
                                  int trials, std::uint64_t seed,
                                  const ParallelFor& pf = serial_for());

// E[tr(U^-2)] of the smaller-side Wishart matrix: LN/(|L-N|^3 - |L-N|) when
// |L-N| >= 2, divergent (nullopt) otherwise.
std::optional<double> wishart_inverse_trace(int tx, int rx);

McEstimate wishart_inverse_trace_mc(int tx, int rx, int trials,
                                    std::uint64_t seed,
                                    const ParallelFor& pf = serial_for());

// Fixed-shape pairwise reduction; the sum depends only on the element
// order, never on the execution schedule.
double tree_sum(const std::vector<double>& values);

}  // namespace mimofbl
