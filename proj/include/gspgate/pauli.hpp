#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gspgate/hamiltonian.hpp"

namespace gspgate {

/// coefficient * P_{q1} P_{q2} ... ; qubits not listed carry the identity.
struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<std::pair<int, char>> ops;  // (qubit, 'X' | 'Y' | 'Z')
};

/// Expands a sum of Pauli strings into a 2^n x 2^n sparse matrix. Qubit q
/// acts on bit q of the basis index (qubit 0 is least significant).
Eigen::SparseMatrix<Complex> pauli_sum_matrix(std::span<const PauliTerm> terms, int num_qubits);

}  // namespace gspgate
