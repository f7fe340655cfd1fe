#pragma once

#include <vector>

#include "mimofbl/matrix.hpp"

namespace mimofbl {

// Eigenvalues of a Hermitian matrix, sorted descending, by cyclic
// Jacobi rotations. Input must be square and Hermitian to 1e-12
// relative tolerance (std::invalid_argument otherwise). Accuracy is a
// non-issue at the sizes used here (Gram matrices of channel draws,
// at most a few hundred rows); Jacobi is chosen for being simple and
// unconditionally stable on Hermitian input.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& g);

}  // namespace mimofbl
