#include "mimofbl/ergodic.hpp"

#include <cmath>
#include <stdexcept>

#include "mimofbl/qfunc.hpp"

namespace mimofbl {
namespace {

double tree_sum_range(const double* data, std::size_t count) {
  if (count == 0) return 0.0;
  if (count == 1) return data[0];
  const std::size_t half = count / 2;
  return tree_sum_range(data, half) + tree_sum_range(data + half, count - half);
}

McEstimate estimate_from_samples(const std::vector<double>& samples,
                                 std::uint64_t seed) {
  McEstimate out;
  out.trials = static_cast<int>(samples.size());
  out.seed = seed;
  const double t = static_cast<double>(samples.size());
  out.mean = tree_sum(samples) / t;
  std::vector<double> sq(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - out.mean;
    sq[i] = d * d;
  }
  const double var = samples.size() > 1 ? tree_sum(sq) / (t - 1.0) : 0.0;
  out.std_error = std::sqrt(var / t);
  return out;
}

// Mean = sample variance; its standard error comes from the asymptotic
// variance of the sample variance, (m4 - s^4)/T.
McEstimate variance_estimate(const std::vector<double>& samples,
                             std::uint64_t seed) {
  McEstimate out;
  out.trials = static_cast<int>(samples.size());
  out.seed = seed;
  const double t = static_cast<double>(samples.size());
  const double mean = tree_sum(samples) / t;
  std::vector<double> sq(samples.size()), quad(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - mean;
    sq[i] = d * d;
    quad[i] = d * d * d * d;
  }
  const double s2 = samples.size() > 1 ? tree_sum(sq) / (t - 1.0) : 0.0;
  const double m4 = tree_sum(quad) / t;
  out.mean = s2;
  out.std_error = std::sqrt(std::max(0.0, m4 - s2 * s2) / t);
  return out;
}

void require_trials(int trials, int minimum) {
  if (trials < minimum) {
    throw std::invalid_argument("Monte Carlo trial count is too small");
  }
}

// Per-draw capacity and dispersion figures from one eigenvalue list.
struct DrawStats {
  double capacity = 0.0;
  double v_st = 0.0;
  double sqrt_v_td = 0.0;     // sum_i sqrt(V_i)
  double sqrt_v_taylor = 0.0; // quadratic surrogate of the same sum
};

DrawStats draw_stats(const std::vector<double>& eigenvalues, double a_scale) {
  DrawStats out;
  for (double lam : eigenvalues) {
    const double a = a_scale * lam;
    const double opa = 1.0 + a;
    out.capacity += std::log2(opa);
    const double vi = (1.0 - 1.0 / (opa * opa)) * kLog2E * kLog2E;
    out.v_st += vi;
    out.sqrt_v_td += std::sqrt(vi);
    out.sqrt_v_taylor += (1.0 - 0.5 / (opa * opa)) * kLog2E;
  }
  return out;
}

}  // namespace

double tree_sum(const std::vector<double>& values) {
  return tree_sum_range(values.data(), values.size());
}

EigenEnsemble sample_eigen_ensemble(int tx, int rx, int trials,
                                    std::uint64_t seed, const ParallelFor& pf) {
  require_trials(trials, 100);
  const SystemConfig cfg(tx, rx, 1.0);  // draw law does not involve SNR
  EigenEnsemble out;
  out.tx = tx;
  out.rx = rx;
  out.seed = seed;
  out.draws.resize(trials);
  pf(trials, [&](int t) {
    RngState rng(seed, static_cast<std::uint64_t>(t));
    out.draws[t] = sample_channel(cfg, rng).eigenvalues;
  });
  return out;
}

ErgodicReport report_from_ensemble(const EigenEnsemble& ens, double snr) {
  const int trials = static_cast<int>(ens.draws.size());
  const int m = ens.tx < ens.rx ? ens.tx : ens.rx;
  const double a_scale = snr / ens.tx;
  std::vector<double> cap(trials), v_st(trials), v_td(trials), sv_td(trials),
      sv_taylor(trials);
  for (int t = 0; t < trials; ++t) {
    const DrawStats d = draw_stats(ens.draws[t], a_scale);
    cap[t] = d.capacity;
    v_st[t] = d.v_st;
    v_td[t] = d.sqrt_v_td * d.sqrt_v_td;
    sv_td[t] = d.sqrt_v_td;
    sv_taylor[t] = d.sqrt_v_taylor;
  }
  ErgodicReport out;
  out.e_capacity = estimate_from_samples(cap, ens.seed);
  out.e_dispersion_st = estimate_from_samples(v_st, ens.seed);
  out.var_dispersion_st = variance_estimate(v_st, ens.seed);
  out.e_dispersion_td = estimate_from_samples(v_td, ens.seed);
  out.e_sqrt_dispersion_td = estimate_from_samples(sv_td, ens.seed);
  out.e_sqrt_dispersion_td_taylor = estimate_from_samples(sv_taylor, ens.seed);
  out.high_snr_capacity = m * std::log2(1.0 + snr);
  out.high_snr_dispersion_st = m * kLog2E * kLog2E;
  out.high_snr_sqrt_dispersion_td = m * kLog2E;
  return out;
}

McEstimate rate_from_ensemble(const EigenEnsemble& ens, double snr,
                              const OperatingPoint& op, Scheme scheme) {
  const int trials = static_cast<int>(ens.draws.size());
  const double a_scale = snr / ens.tx;
  const double qe = q_inv(op.epsilon);
  const double n = op.blocklength;
  std::vector<double> rate(trials);
  for (int t = 0; t < trials; ++t) {
    const DrawStats d = draw_stats(ens.draws[t], a_scale);
    const double v =
        scheme == Scheme::ST ? d.v_st : d.sqrt_v_td * d.sqrt_v_td;
    rate[t] = d.capacity - std::sqrt(v / n) * qe;
  }
  return estimate_from_samples(rate, ens.seed);
}

ErgodicReport ergodic_report(const SystemConfig& cfg, int trials,
                             std::uint64_t seed, const ParallelFor& pf) {
  return report_from_ensemble(
      sample_eigen_ensemble(cfg.tx, cfg.rx, trials, seed, pf), cfg.snr);
}

double max_achievable_rate_high_snr(const SystemConfig& cfg,
                                    const OperatingPoint& op, Scheme scheme) {
  const double m = cfg.dof();
  const double n = op.blocklength;
  const double penalty =
      scheme == Scheme::ST ? std::sqrt(m / n) : m / std::sqrt(n);
  return m * std::log2(1.0 + cfg.snr) - penalty * q_inv(op.epsilon) * kLog2E;
}

McEstimate max_achievable_rate_mc(const SystemConfig& cfg,
                                  const OperatingPoint& op, Scheme scheme,
                                  int trials, std::uint64_t seed,
                                  const ParallelFor& pf) {
  return rate_from_ensemble(
      sample_eigen_ensemble(cfg.tx, cfg.rx, trials, seed, pf), cfg.snr, op,
      scheme);
}

std::optional<double> wishart_inverse_trace(int tx, int rx) {
  if (tx < 1 || rx < 1) {
    throw std::invalid_argument("wishart_inverse_trace: bad antenna counts");
  }
  const double gap = std::abs(tx - rx);
  if (gap < 2.0) return std::nullopt;  // denominator <= 0: divergent
  return static_cast<double>(tx) * rx / (gap * gap * gap - gap);
}

McEstimate wishart_inverse_trace_mc(int tx, int rx, int trials,
                                    std::uint64_t seed, const ParallelFor& pf) {
  const EigenEnsemble ens = sample_eigen_ensemble(tx, rx, trials, seed, pf);
  std::vector<double> tr(trials);
  for (int t = 0; t < trials; ++t) {
    double acc = 0.0;
    for (double lam : ens.draws[t]) acc += 1.0 / (lam * lam);
    tr[t] = acc;
  }
  return estimate_from_samples(tr, seed);
}

}  // namespace mimofbl
