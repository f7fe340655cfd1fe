#include "mimofbl/info_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mimofbl/quadrature.hpp"
#include "mimofbl/special.hpp"

namespace mimofbl {
namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

// Per-use fluctuation D = u - C = log2(e) - c*S with c = log2(e)/(1+a) and
// S = |sqrt(a) W - 1|^2, so S/(a/2) is noncentral chi-square with 2 degrees
// of freedom and noncentrality 2/a. Closed-form cumulants of S follow from
// the chi-square ones: kappa2 = a^2 + 2a, kappa3 = 2a^3 + 6a^2.
double third_cumulant_of_d(double a) {
  const double c = kLog2E / (1.0 + a);
  return -c * c * c * (2.0 * a * a * a + 6.0 * a * a);
}

// log M_D(z) for the centered per-use fluctuation of one link, from the
// noncentral chi-square MGF: M_S(w) = exp(w/(1-wa))/(1-wa), Re(wa) < 1.
std::complex<double> link_log_mgf(double a, std::complex<double> z) {
  const double c = kLog2E / (1.0 + a);
  const std::complex<double> zc = z * c;
  const std::complex<double> denom = 1.0 + a * zc;  // 1 - (-zc) a
  return zc * (1.0 + a) - zc / denom - std::log(denom);
}

}  // namespace

LinkStats link_stats(double link_gain, const SystemConfig& cfg) {
  if (link_gain < 0.0) {
    throw std::invalid_argument("link_stats: link gain must be nonnegative");
  }
  LinkStats out;
  out.link_gain = link_gain;
  out.a = cfg.per_antenna_snr() * link_gain;
  if (out.a == 0.0) return out;
  const double opa = 1.0 + out.a;
  out.capacity = std::log2(opa);
  out.dispersion = (1.0 - 1.0 / (opa * opa)) * kLog2E * kLog2E;
  out.third_abs_moment = third_abs_moment(out.a);
  return out;
}

SchemeStats scheme_stats(const ChannelRealization& ch, const SystemConfig& cfg,
                         Scheme scheme) {
  if (static_cast<int>(ch.eigenvalues.size()) != cfg.dof()) {
    throw std::invalid_argument(
        "scheme_stats: realization carries a different spatial DoF than cfg");
  }
  SchemeStats out;
  out.scheme = scheme;
  out.per_link.reserve(ch.eigenvalues.size());
  std::vector<double> sqrt_v;
  std::vector<double> a_values;
  for (double lam : ch.eigenvalues) {
    LinkStats ls = link_stats(lam, cfg);
    out.capacity += ls.capacity;
    out.dispersion += ls.dispersion;
    if (scheme == Scheme::TD) {
      sqrt_v.push_back(std::sqrt(ls.dispersion));
      out.third_abs_moment = std::max(out.third_abs_moment, ls.third_abs_moment);
    }
    if (ls.a > 0.0) a_values.push_back(ls.a);
    out.per_link.push_back(std::move(ls));
  }
  if (scheme == Scheme::TD) {
    // (sum_i sqrt(V_i))^2 expanded as sum_i V_i + 2 sum_{i<j} sqrt(V_i)sqrt(V_j):
    // the diagonal enters exactly, so a single active link reproduces the ST
    // value bit for bit and the nonnegative cross terms keep V_TD >= V_ST as
    // floating-point numbers, not just in exact arithmetic.
    double cross = 0.0;
    for (std::size_t i = 0; i < sqrt_v.size(); ++i) {
      for (std::size_t j = i + 1; j < sqrt_v.size(); ++j) {
        cross += sqrt_v[i] * sqrt_v[j];
      }
    }
    out.dispersion += 2.0 * cross;
  } else {
    out.third_abs_moment = aggregate_third_abs_moment(a_values);
  }
  return out;
}

InfoDensitySample sample_info_density(const ChannelRealization& ch,
                                      const SystemConfig& cfg, Scheme scheme,
                                      int n, RngState& rng, int link) {
  if (n < 1) {
    throw std::invalid_argument("sample_info_density: blocklength must be >= 1");
  }
  const int m = cfg.dof();
  if (static_cast<int>(ch.eigenvalues.size()) != m) {
    throw std::invalid_argument(
        "sample_info_density: realization does not match cfg");
  }
  InfoDensitySample out;
  out.blocklength = n;
  out.scheme = scheme;

  std::vector<double> a_vals;
  if (scheme == Scheme::ST) {
    for (double lam : ch.eigenvalues) {
      const double a = cfg.per_antenna_snr() * lam;
      if (a > 0.0) a_vals.push_back(a);
    }
  } else {
    if (link < 0 || link >= m) {
      throw std::invalid_argument("sample_info_density: link index out of range");
    }
    out.link = link;
    const double a = cfg.per_antenna_snr() * ch.eigenvalues[link];
    if (a > 0.0) a_vals.push_back(a);
  }
  if (a_vals.empty()) return out;  // zero-gain links carry exactly zero

  const int k = static_cast<int>(a_vals.size());
  std::vector<double> sqrt_a(k), inv_opa(k), cap(k);
  for (int i = 0; i < k; ++i) {
    sqrt_a[i] = std::sqrt(a_vals[i]);
    inv_opa[i] = 1.0 / (1.0 + a_vals[i]);
    cap[i] = std::log2(1.0 + a_vals[i]);
  }
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < k; ++i) {
      const auto [z1, z2] = rng.next_normal_pair();
      const double wr = z1 * kSqrtHalf;  // W ~ CN(0,1)
      const double wi = z2 * kSqrtHalf;
      const double dr = sqrt_a[i] * wr - 1.0;
      const double di = sqrt_a[i] * wi;
      const double s = dr * dr + di * di;
      sum += cap[i] + (1.0 - s * inv_opa[i]) * kLog2E;
    }
  }
  out.value = sum;
  return out;
}

double third_abs_moment(double a) {
  if (a < 0.0) {
    throw std::invalid_argument("third_abs_moment: a must be nonnegative");
  }
  if (a == 0.0) return 0.0;
  // theta = c^3 E|S - (1+a)|^3 with the substitution r = sqrt(s), which
  // turns the density into (2r/a) exp(-(r-1)^2/a) i0e(2r/a). The absolute
  // value kinks at r = sqrt(1+a); integrate the two smooth pieces.
  const double c = kLog2E / (1.0 + a);
  const double opa = 1.0 + a;
  const auto integrand = [a, opa](double r) {
    const double gap = std::abs(opa - r * r);
    const double dev = r - 1.0;
    return gap * gap * gap * (2.0 * r / a) * std::exp(-dev * dev / a) *
           bessel_i0e(2.0 * r / a);
  };
  const double spread = 13.0 * std::sqrt(a);
  const double lo = std::max(0.0, 1.0 - spread);
  const double hi = 1.0 + spread;
  const double kink = std::sqrt(opa);
  double total = integrate(integrand, lo, std::min(kink, hi), 1e-12).value;
  if (kink < hi) {
    total += integrate(integrand, kink, hi, 1e-12).value;
  }
  return c * c * c * total;
}

double positive_part_third_moment(
    const std::function<std::complex<double>(std::complex<double>)>& log_mgf,
    double damping) {
  if (!(damping > 0.0)) {
    throw std::invalid_argument("positive_part_third_moment: damping must be > 0");
  }
  const auto integrand = [&](double u) {
    const std::complex<double> z(damping, u);
    const std::complex<double> z2 = z * z;
    return std::real(std::exp(log_mgf(z)) / (z2 * z2));
  };
  // The integrand decays at least as fast as u^-4; sum doubling panels
  // until they stop contributing.
  double total = integrate(integrand, 0.0, 1.0, 1e-11).value;
  double lo = 1.0;
  int quiet = 0;
  for (int panel = 0; panel < 60 && quiet < 2; ++panel) {
    const double hi = 2.0 * lo;
    const double piece = integrate(integrand, lo, hi, 1e-11).value;
    total += piece;
    quiet = (std::abs(piece) < 1e-15 * std::max(std::abs(total), 1e-300))
                ? quiet + 1
                : 0;
    lo = hi;
  }
  return (6.0 / 3.14159265358979323846) * total;
}

double aggregate_third_abs_moment(const std::vector<double>& a_values) {
  std::vector<double> a;
  a.reserve(a_values.size());
  for (double v : a_values) {
    if (v < 0.0) {
      throw std::invalid_argument(
          "aggregate_third_abs_moment: gains must be nonnegative");
    }
    if (v > 0.0) a.push_back(v);
  }
  if (a.empty()) return 0.0;

  double kappa3 = 0.0;
  double z_max = std::numeric_limits<double>::infinity();
  for (double ai : a) {
    kappa3 += third_cumulant_of_d(ai);
    // M_{-D}(z) stays finite while Re(z) < (1+a_i)/(a_i log2 e) for all i.
    z_max = std::min(z_max, (1.0 + ai) / (ai * kLog2E));
  }
  const double damping = std::min(10.0, 0.5 * z_max);
  const auto log_mgf_neg_d = [&a](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (double ai : a) acc += link_log_mgf(ai, -z);
    return acc;
  };
  const double positive_part = positive_part_third_moment(log_mgf_neg_d, damping);
  // |d|^3 = d^3 + 2 max(-d,0)^3 pointwise, and E[D^3] is the third cumulant.
  return std::max(0.0, kappa3 + 2.0 * positive_part);
}

}  // namespace mimofbl
