#include "mimofbl/channel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "mimofbl/eig.hpp"

namespace mimofbl {

SystemConfig::SystemConfig(int tx_antennas, int rx_antennas, double snr_linear)
    : tx(tx_antennas), rx(rx_antennas), snr(snr_linear) {
  if (tx <= 0 || rx <= 0) {
    throw std::invalid_argument("SystemConfig: antenna counts must be positive");
  }
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("SystemConfig: snr must be finite and positive");
  }
}

OperatingPoint::OperatingPoint(int n, double eps) : blocklength(n), epsilon(eps) {
  if (blocklength <= 0) {
    throw std::invalid_argument("OperatingPoint: blocklength must be positive");
  }
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("OperatingPoint: epsilon must lie in (0,1)");
  }
}

ChannelRealization ChannelRealization::from_matrix(ComplexMatrix h) {
  ChannelRealization out;
  out.eigenvalues = gram_eigenvalues(h);
  out.h = std::move(h);
  return out;
}

ChannelRealization ChannelRealization::from_gains(int tx_antennas, int rx_antennas,
                                                  std::vector<double> gains) {
  if (tx_antennas <= 0 || rx_antennas <= 0) {
    throw std::invalid_argument("from_gains: antenna counts must be positive");
  }
  const int m = tx_antennas < rx_antennas ? tx_antennas : rx_antennas;
  if (static_cast<int>(gains.size()) != m) {
    throw std::invalid_argument("from_gains: need one gain per spatial branch");
  }
  ChannelRealization out;
  out.h = ComplexMatrix(tx_antennas, rx_antennas);
  for (int i = 0; i < m; ++i) {
    if (gains[i] < 0.0) {
      throw std::invalid_argument("from_gains: gains must be nonnegative");
    }
    out.h(i, i) = std::sqrt(gains[i]);
  }
  std::sort(gains.begin(), gains.end(), std::greater<double>());
  out.eigenvalues = std::move(gains);
  return out;
}

ComplexMatrix sample_complex_gaussian(int rows, int cols, double variance,
                                      RngState& rng) {
  ComplexMatrix out(rows, cols);
  const double comp_sigma = std::sqrt(variance / 2.0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      // One counter block per entry: real part, imaginary part.
      const auto [re, im] = rng.next_normal_pair();
      out(i, j) = {comp_sigma * re, comp_sigma * im};
    }
  }
  return out;
}

ChannelRealization sample_channel(const SystemConfig& cfg, RngState& rng) {
  return ChannelRealization::from_matrix(
      sample_complex_gaussian(cfg.tx, cfg.rx, 1.0, rng));
}

std::vector<double> gram_eigenvalues(const ComplexMatrix& h) {
  const int rows = h.rows;
  const int cols = h.cols;
  const int m = rows < cols ? rows : cols;
  // Build the m x m Gram matrix on the smaller side. Fill the upper
  // triangle and mirror so the input to the eigensolver is Hermitian to
  // the last bit.
  ComplexMatrix g(m, m);
  const bool left = (rows <= cols);  // left: G = H H^H, else G = H^H H
  const int inner = left ? cols : rows;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < inner; ++k) {
        const std::complex<double> x = left ? h(i, k) : h(k, i);
        const std::complex<double> y = left ? h(j, k) : h(k, j);
        acc += x * std::conj(y);
      }
      g(i, j) = acc;
      if (j != i) {
        g(j, i) = std::conj(acc);
      } else {
        g(i, i) = {acc.real(), 0.0};
      }
    }
  }
  auto eigs = hermitian_eigenvalues(g);
  // Gram matrices are positive semidefinite; clamp the rounding dust.
  for (double& v : eigs) {
    if (v < 0.0) v = 0.0;
  }
  return eigs;
}

}  // namespace mimofbl
