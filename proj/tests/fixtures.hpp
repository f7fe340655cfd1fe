// Frozen channel draws used across tests. The 4x4 realization was sampled
// once (seed 42, stream 0) and is stored as literals so test expectations
// survive any change to the sampler; the stored spectrum is cross-checked
// against an independent characteristic-polynomial oracle in the eig tests.
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mimofbl/channel.hpp"
#include "mimofbl/matrix.hpp"

namespace fixtures {

inline mimofbl::ComplexMatrix frozen_h4() {
  constexpr std::array<std::array<double, 2>, 16> entries = {{
      {-0.47049108105767956, 0.73257946057099299},
      {-1.0139127631102811, 0.29930287228626018},
      {0.095465026089673874, -0.63949774569340567},
      {-0.45838242540122381, 0.43521094888971684},
      {0.03753678469078358, 0.41723062567040348},
      {1.0713994189035065, 0.27944660910816954},
      {0.22420208674355127, 0.49659604346028158},
      {0.39593632310167542, 0.85994924981772214},
      {-1.4167395532522851, 0.008178600323446937},
      {-0.96185536981062825, 0.021757467065574587},
      {-0.38181316434293944, -0.5129399130159501},
      {-0.85015864414490583, 0.32432310845868545},
      {0.73977638049113448, 1.0989984321668993},
      {0.75370979888982947, 0.42216046150419406},
      {-0.48740526975834336, 0.28079574976689553},
      {0.12517694314745581, 1.0264228889926139},
  }};
  mimofbl::ComplexMatrix h(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto& e = entries[4 * i + j];
      h(i, j) = {e[0], e[1]};
    }
  }
  return h;
}

inline const std::vector<double>& frozen_eigenvalues4() {
  static const std::vector<double> eigs = {
      11.169653305783397,
      1.4923119972895165,
      0.41601126386334808,
      0.26657199483546867,
  };
  return eigs;
}

// The fixture operating regime: L = N = 4 at 10 dB.
inline mimofbl::SystemConfig fixture_config() {
  return mimofbl::SystemConfig(4, 4, 10.0);
}

inline mimofbl::ChannelRealization fixture_channel() {
  mimofbl::ChannelRealization ch;
  ch.h = frozen_h4();
  ch.eigenvalues = frozen_eigenvalues4();
  return ch;
}

// Small hand-written 2x2 draw for closed-form cross-checks.
inline mimofbl::ComplexMatrix frozen_h2() {
  mimofbl::ComplexMatrix h(2, 2);
  h(0, 0) = {1.0, 0.5};
  h(0, 1) = {-0.3, 0.2};
  h(1, 0) = {0.7, -1.0};
  h(1, 1) = {0.4, 0.9};
  return h;
}

}  // namespace fixtures
