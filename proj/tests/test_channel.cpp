#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "mimofbl/channel.hpp"
#include "mimofbl/matrix.hpp"
#include "mimofbl/rng.hpp"

using mimofbl::adjoint;
using mimofbl::ChannelRealization;
using mimofbl::ComplexMatrix;
using mimofbl::gram_eigenvalues;
using mimofbl::OperatingPoint;
using mimofbl::RngState;
using mimofbl::sample_channel;
using mimofbl::sample_complex_gaussian;
using mimofbl::SystemConfig;

TEST_SUITE("channel") {

TEST_CASE("config accessors and validation") {
  const SystemConfig cfg(4, 2, 10.0);
  CHECK(cfg.dof() == 2);
  CHECK(cfg.per_antenna_snr() == doctest::Approx(2.5));
  CHECK_THROWS_AS(SystemConfig(0, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig(2, -1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig(2, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig(2, 2, -3.0), std::invalid_argument);
}

TEST_CASE("operating point validation") {
  const OperatingPoint op(100, 1e-3);
  CHECK(op.blocklength == 100);
  CHECK(op.epsilon == 1e-3);
  CHECK_THROWS_AS(OperatingPoint(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(OperatingPoint(10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(OperatingPoint(10, 1.0), std::invalid_argument);
}

TEST_CASE("gaussian entries have unit variance and zero mean") {
  RngState rng(314, 0);
  const int trials = 3000;
  double sum_re = 0.0, sum_sq = 0.0;
  const int rows = 4, cols = 4;
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix h = sample_complex_gaussian(rows, cols, 1.0, rng);
    for (const auto& e : h.entries) {
      sum_re += e.real() + e.imag();
      sum_sq += std::norm(e);
    }
  }
  const double n_entries = static_cast<double>(trials) * rows * cols;
  // |h|^2 is Exp(1): mean 1, variance 1. Components are N(0, 1/2).
  CHECK(std::abs(sum_re / (2.0 * n_entries)) <
        5.0 * std::sqrt(0.5 / (2.0 * n_entries)));
  CHECK(std::abs(sum_sq / n_entries - 1.0) < 5.0 / std::sqrt(n_entries));
}

TEST_CASE("gram eigenvalues: shape, order, nonnegativity") {
  RngState rng(11, 2);
  const ComplexMatrix h = sample_complex_gaussian(5, 3, 1.0, rng);
  const auto eigs = gram_eigenvalues(h);
  REQUIRE(eigs.size() == 3);
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    CHECK(eigs[i] >= 0.0);
    if (i) CHECK(eigs[i] <= eigs[i - 1]);
  }
}

TEST_CASE("tall and wide orientations share their nonzero spectrum") {
  RngState rng(12, 5);
  const ComplexMatrix h = sample_complex_gaussian(6, 2, 1.0, rng);
  const auto tall = gram_eigenvalues(h);
  const auto wide = gram_eigenvalues(adjoint(h));
  REQUIRE(tall.size() == wide.size());
  for (std::size_t i = 0; i < tall.size(); ++i) {
    CHECK(tall[i] == doctest::Approx(wide[i]).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalue sum equals squared frobenius norm") {
  const ComplexMatrix h = fixtures::frozen_h4();
  const auto eigs = gram_eigenvalues(h);
  double sum = 0.0;
  for (double e : eigs) sum += e;
  CHECK(sum == doctest::Approx(h.frobenius_sq()).epsilon(1e-12));
}

TEST_CASE("total gram energy averages to tx*rx") {
  const SystemConfig cfg(4, 2, 1.0);
  RngState rng(500, 0);
  const int trials = 4000;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ChannelRealization ch = sample_channel(cfg, rng);
    for (double e : ch.eigenvalues) total += e;
  }
  // Sum of eigenvalues = sum of tx*rx unit-mean exponentials.
  const double mean = total / trials;
  const double se = std::sqrt(static_cast<double>(cfg.tx * cfg.rx) / trials);
  CHECK(std::abs(mean - cfg.tx * cfg.rx) < 5.0 * se);
}

TEST_CASE("from_matrix keeps the draw and its spectrum consistent") {
  const ChannelRealization ch =
      ChannelRealization::from_matrix(fixtures::frozen_h4());
  const auto direct = gram_eigenvalues(ch.h);
  REQUIRE(ch.eigenvalues.size() == direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(ch.eigenvalues[i] == direct[i]);
  }
}

TEST_CASE("from_gains embeds a diagonal channel") {
  const ChannelRealization ch =
      ChannelRealization::from_gains(4, 2, {0.5, 2.0});
  CHECK(ch.eigenvalues == std::vector<double>{2.0, 0.5});
  const auto eigs = gram_eigenvalues(ch.h);
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(eigs[1] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(ChannelRealization::from_gains(2, 2, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChannelRealization::from_gains(2, 2, {1.0, -0.5}),
                  std::invalid_argument);
}

TEST_CASE("sampling is deterministic in (seed, stream)") {
  const SystemConfig cfg(3, 3, 1.0);
  RngState a(77, 9), b(77, 9);
  const ChannelRealization ca = sample_channel(cfg, a);
  const ChannelRealization cb = sample_channel(cfg, b);
  CHECK(ca.h.entries == cb.h.entries);
  CHECK(ca.eigenvalues == cb.eigenvalues);
}

}  // TEST_SUITE
