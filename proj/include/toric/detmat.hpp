#pragma once

#include <vector>

#include "toric/util.hpp"

namespace toric {

using IntMatrix = std::vector<std::vector<Int>>;

// Exact determinant of a square integer matrix. Fraction-free (Bareiss)
// elimination for small dimensions, residue-based reconstruction (row-echelon
// mod 31-bit primes + CRT against a Hadamard bound) for larger ones.
Int det_exact(const IntMatrix& a);

Int det_bareiss(IntMatrix a);
Int det_modular(const IntMatrix& a);

// Product over rows of the squared 2-norm; |det|^2 <= this.
Int hadamard_bound_sq(const IntMatrix& a);

}  // namespace toric
