#pragma once

#include <complex>
#include <vector>

namespace mimofbl {

// Dense row-major complex matrix. Deliberately minimal: the project
// only ever forms Gram products of channel matrices that are at most a
// few hundred rows, so there is no need for views, expressions, or
// pivoted factorizations.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> entries;  // row-major, rows*cols

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c);

  std::complex<double>& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const std::complex<double>& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

  static ComplexMatrix identity(int n);

  // Sum of |entry|^2.
  double frobenius_sq() const;
};

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace mimofbl
