#include "mimofbl/eig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace mimofbl {

namespace {

double max_abs_entry(const ComplexMatrix& g) {
  double m = 0.0;
  for (const auto& e : g.entries) m = std::max(m, std::abs(e));
  return m;
}

double offdiag_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    for (int j = i + 1; j < a.cols; ++j) s += std::norm(a(i, j));
  }
  return s;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& g) {
  if (g.rows != g.cols || g.rows == 0) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  }
  const int n = g.rows;
  const double scale = std::max(1.0, max_abs_entry(g));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(g(i, j) - std::conj(g(j, i))) > 1e-12 * scale) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
      }
    }
  }

  ComplexMatrix a = g;
  if (n == 1) return {a(0, 0).real()};

  const double fro_sq = [&] {
    double s = 0.0;
    for (const auto& e : a.entries) s += std::norm(e);
    return std::max(s, 1e-300);
  }();

  // Sweep until the off-diagonal mass is at rounding level. Each
  // rotation phases the (p,q) pivot real, then applies the standard
  // symmetric Jacobi rotation; the pivot is exactly annihilated.
  for (int sweep = 0; sweep < 60; ++sweep) {
    if (offdiag_sq(a) <= 1e-28 * fro_sq) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> beta = a(p, q);
        const double b = std::abs(beta);
        if (b <= 1e-300) continue;
        const std::complex<double> phase = beta / b;  // e^{i phi}
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double tau = (alpha - gamma) / (2.0 * b);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // U = diag(1, conj(phase)) * [[c, -s], [s, c]] on columns (p,q).
        const std::complex<double> u21 = s * std::conj(phase);
        const std::complex<double> u22 = c * std::conj(phase);
        for (int k = 0; k < n; ++k) {
          const std::complex<double> x = a(k, p);
          const std::complex<double> y = a(k, q);
          a(k, p) = x * c + y * u21;
          a(k, q) = -x * s + y * u22;
        }
        for (int k = 0; k < n; ++k) {
          const std::complex<double> x = a(p, k);
          const std::complex<double> y = a(q, k);
          a(p, k) = c * x + std::conj(u21) * y;
          a(q, k) = -s * x + std::conj(u22) * y;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

}  // namespace mimofbl
