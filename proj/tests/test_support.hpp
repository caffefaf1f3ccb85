#pragma once

// Test-only helpers: random instances and independent dense oracles. Nothing
// here calls into the spectral module's solvers.

#include <algorithm>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gspgate/hamiltonian.hpp"

namespace gspgate::testing {

inline Eigen::MatrixXcd random_hermitian(Index n, std::mt19937_64& rng, bool real = false) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd a(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = Complex(normal(rng), real ? 0.0 : normal(rng));
  }
  Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  return h;
}

/// Upper triangle of a dense Hermitian matrix as a Hamiltonian.
inline Hamiltonian to_hamiltonian(const Eigen::MatrixXcd& m) {
  std::vector<MatrixEntry> upper;
  for (Index i = 0; i < m.rows(); ++i) {
    upper.push_back({i, i, Complex(m(i, i).real(), 0.0)});
    for (Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != Complex{}) upper.push_back({i, j, m(i, j)});
    }
  }
  return Hamiltonian(m.rows(), std::move(upper));
}

inline Eigen::VectorXcd random_state(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v.normalized();
}

/// Ground data from a general (non-Hermitian) Schur-based eigensolver,
/// sorted by real part. Assumes a non-degenerate ground state.
struct OracleGround {
  double e0;
  double e1;
  Eigen::VectorXcd psi0;
};

inline OracleGround oracle_ground(const Eigen::MatrixXcd& h) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h);
  std::vector<Index> order(h.rows());
  for (Index i = 0; i < h.rows(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return es.eigenvalues()(a).real() < es.eigenvalues()(b).real();
  });
  OracleGround g;
  g.e0 = es.eigenvalues()(order[0]).real();
  g.e1 = h.rows() > 1 ? es.eigenvalues()(order[1]).real() : g.e0;
  g.psi0 = es.eigenvectors().col(order[0]).normalized();
  return g;
}

/// Dense Kronecker product of single-qubit Paulis; qubit 0 is the rightmost
/// factor so that it acts on the least significant bit.
inline Eigen::MatrixXcd kron_pauli(const std::string& ops_high_to_low) {
  auto single = [](char p) {
    Eigen::Matrix2cd m;
    const Complex i(0, 1);
    switch (p) {
      case 'X': m << 0, 1, 1, 0; break;
      case 'Y': m << 0, -i, i, 0; break;
      case 'Z': m << 1, 0, 0, -1; break;
      default: m << 1, 0, 0, 1; break;
    }
    return m;
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (char p : ops_high_to_low) {
    const Eigen::Matrix2cd s = single(p);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Index r = 0; r < out.rows(); ++r) {
      for (Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * s;
    }
    out = next;
  }
  return out;
}

}  // namespace gspgate::testing
