#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mimofbl/channel.hpp"
#include "mimofbl/rng.hpp"

namespace mimofbl {

// All rates are bits per channel use, dispersions bits^2, third moments
// bits^3. Natural logs never leak past this boundary.
inline constexpr double kLog2E = 1.4426950408889634074;  // log2(e)
inline constexpr double kLn2 = 0.69314718055994530942;   // 1/kLog2E

enum class Scheme { ST, TD };

// Statistics of one eigen-link with effective SNR a = rho*lambda/L.
// The per-use information density of the link is
//   u = C + (1 - |sqrt(a) W - 1|^2 / (1+a)) * log2(e),  W ~ CN(0,1).
struct LinkStats {
  double link_gain = 0.0;         // lambda_i
  double a = 0.0;                 // rho*lambda_i/L
  double capacity = 0.0;          // C_i = log2(1+a)
  double dispersion = 0.0;        // V_i = (1 - 1/(1+a)^2) * log2(e)^2
  double third_abs_moment = 0.0;  // theta_i = E|u - C_i|^3
};

// Aggregate statistics of one channel realization under one coding scheme.
// Capacity adds for both schemes. Dispersion adds for ST; TD pays
// (sum sqrt(V_i))^2 because each link carries its own codeword.
// third_abs_moment is the third absolute central moment of the per-use
// aggregate sum_i u_i for ST; TD codes links independently, so its
// scheme-level value reports the worst (largest) per-link theta_i and the
// per_link list carries the full set.
struct SchemeStats {
  Scheme scheme = Scheme::ST;
  std::vector<LinkStats> per_link;
  double capacity = 0.0;
  double dispersion = 0.0;
  double third_abs_moment = 0.0;
};

// One draw of the information density accumulated over a blocklength.
// link is meaningful only for TD (which link's codeword was sampled).
struct InfoDensitySample {
  double value = 0.0;  // bits
  int blocklength = 0;
  Scheme scheme = Scheme::ST;
  int link = -1;
};

LinkStats link_stats(double link_gain, const SystemConfig& cfg);

SchemeStats scheme_stats(const ChannelRealization& ch, const SystemConfig& cfg,
                         Scheme scheme);

// Sum of n*m (ST) or n (TD, one link) i.i.d. per-use terms.
InfoDensitySample sample_info_density(const ChannelRealization& ch,
                                      const SystemConfig& cfg, Scheme scheme,
                                      int n, RngState& rng, int link = 0);

// E|u - C|^3 for a single link at effective SNR a, by quadrature over the
// noncentral-chi-square density of |sqrt(a) W - 1|^2.
double third_abs_moment(double a);

// Third absolute central moment of the per-use aggregate sum_i u_i, via the
// exact third cumulant plus a damped transform inversion for the one-sided
// part. Zero-gain entries contribute nothing; an empty (or all-zero) list
// gives 0.
double aggregate_third_abs_moment(const std::vector<double>& a_values);

// E[max(X,0)^3] recovered from the log-MGF of X, which must be finite on
// 0 < Re z <= damping:  E[X_+^3] = (6/pi) Int_0^inf Re[M_X(d+iu)/(d+iu)^4] du.
// Exposed so the inversion machinery can be validated against distributions
// with known closed forms.
double positive_part_third_moment(
    const std::function<std::complex<double>(std::complex<double>)>& log_mgf,
    double damping);

}  // namespace mimofbl
