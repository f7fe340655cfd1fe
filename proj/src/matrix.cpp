#include "mimofbl/matrix.hpp"

#include <stdexcept>

namespace mimofbl {

ComplexMatrix::ComplexMatrix(int r, int c) : rows(r), cols(c) {
  if (r <= 0 || c <= 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  entries.assign(static_cast<std::size_t>(r) * c, {0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double ComplexMatrix::frobenius_sq() const {
  double s = 0.0;
  for (const auto& e : entries) s += std::norm(e);
  return s;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) r(j, i) = std::conj(a(i, j));
  }
  return r;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) {
    throw std::invalid_argument("multiply: inner dimensions disagree");
  }
  ComplexMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const std::complex<double> aik = a(i, k);
      if (aik == std::complex<double>(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

}  // namespace mimofbl
