#include "gspgate/pauli.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "gspgate/errors.hpp"

namespace gspgate {

Eigen::SparseMatrix<Complex> pauli_sum_matrix(std::span<const PauliTerm> terms, int num_qubits) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw DomainError("qubit count " + std::to_string(num_qubits) + " is not supported");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(terms.size() * dim);

  for (const auto& term : terms) {
    std::uint64_t flip = 0;   // X or Y
    std::uint64_t sign = 0;   // Z or Y
    std::uint64_t seen = 0;
    int num_y = 0;
    for (const auto& [qubit, op] : term.ops) {
      if (qubit < 0 || qubit >= num_qubits) {
        throw DomainError("qubit index " + std::to_string(qubit) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
      }
      const std::uint64_t bit = std::uint64_t{1} << qubit;
      if (op == 'I') continue;
      if (seen & bit) {
        throw DomainError("qubit " + std::to_string(qubit) + " appears twice in one Pauli string");
      }
      seen |= bit;
      switch (op) {
        case 'X': flip |= bit; break;
        case 'Y': flip |= bit; sign |= bit; ++num_y; break;
        case 'Z': sign |= bit; break;
        default:
          throw DomainError(std::string("unknown Pauli operator '") + op + "'");
      }
    }
    // Y = i X Z acting on |b>: i^{#Y} (-1)^{popcount(b & sign)} |b ^ flip>
    static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex base = term.coefficient * kIPowers[num_y % 4];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const Complex value = (std::popcount(col & sign) & 1) ? -base : base;
      triplets.emplace_back(static_cast<Index>(col ^ flip), static_cast<Index>(col), value);
    }
  }

  Eigen::SparseMatrix<Complex> m(static_cast<Index>(dim), static_cast<Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune(Complex{});
  return m;
}

}  // namespace gspgate
