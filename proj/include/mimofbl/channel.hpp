#pragma once

#include <vector>

#include "mimofbl/matrix.hpp"
#include "mimofbl/rng.hpp"

namespace mimofbl {

// Antenna counts and SNR of the flat Rayleigh MIMO link. SNR is stored
// linear; dB enters only at the CLI boundary. The model is quasi-static:
// one channel draw stays fixed for the whole codeword.
struct SystemConfig {
  int tx = 1;        // L
  int rx = 1;        // N
  double snr = 1.0;  // rho, linear power ratio

  SystemConfig() = default;
  SystemConfig(int tx_antennas, int rx_antennas, double snr_linear);

  int dof() const { return tx < rx ? tx : rx; }     // m = min(L, N)
  double per_antenna_snr() const { return snr / tx; }  // scales each eigen-link gain
};

// Blocklength and target block error probability of one operating point.
struct OperatingPoint {
  int blocklength = 1;   // n, channel uses
  double epsilon = 0.5;  // target error, in (0,1)

  OperatingPoint() = default;
  OperatingPoint(int n, double eps);
};

// One channel draw together with the eigenvalues of its smaller-side
// Gram matrix (H^H H when tx >= rx, H H^H otherwise), descending.
// Every downstream formula consumes only the eigenvalues; H is kept
// for oracle checks.
struct ChannelRealization {
  ComplexMatrix h;                  // tx x rx
  std::vector<double> eigenvalues;  // length min(tx, rx), descending

  static ChannelRealization from_matrix(ComplexMatrix h);
  // Diagonal embedding with prescribed link gains; used by fixtures and
  // synthetic tests. gains.size() must equal min(tx_antennas, rx_antennas).
  static ChannelRealization from_gains(int tx_antennas, int rx_antennas,
                                       std::vector<double> gains);
};

// i.i.d. unit-variance circularly symmetric complex Gaussian entries.
ChannelRealization sample_channel(const SystemConfig& cfg, RngState& rng);

// Eigenvalues of the smaller-side Gram matrix of h, descending. The
// nonzero spectra of H^H H and H H^H coincide, so this is the full set
// of squared singular values.
std::vector<double> gram_eigenvalues(const ComplexMatrix& h);

// Fills a rows x cols matrix with i.i.d. CN(0, variance) entries
// (real and imaginary parts each carry variance/2).
ComplexMatrix sample_complex_gaussian(int rows, int cols, double variance,
                                      RngState& rng);

}  // namespace mimofbl
