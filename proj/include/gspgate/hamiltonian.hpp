#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace gspgate {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// One stored coefficient of a Hermitian matrix; row <= col.
struct MatrixEntry {
  Index row = 0;
  Index col = 0;
  Complex value{};
};

/// Sparse Hermitian operator stored as its upper triangle. The lower
/// triangle is never stored, so the completed matrix equals its conjugate
/// transpose exactly.
class Hamiltonian {
 public:
  /// Validates indices, ordering (row <= col), duplicates and real diagonal.
  /// Throws DomainError on violation.
  Hamiltonian(Index dim, std::vector<MatrixEntry> upper, std::string energy_unit = "Hartree");

  Index dim() const { return dim_; }
  const std::string& energy_unit() const { return energy_unit_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }

  /// True when every stored coefficient has zero imaginary part.
  bool is_real() const { return is_real_; }

  /// Completed matrix, both triangles.
  Eigen::SparseMatrix<Complex> sparse() const;
  /// Real part of the completed matrix; only meaningful when is_real().
  Eigen::SparseMatrix<double> sparse_real() const;
  Eigen::MatrixXcd dense() const;

  /// Maximum absolute row sum, an upper bound on the spectral norm.
  double norm_bound() const;

  /// Builds from a completed matrix, keeping its upper triangle after
  /// checking |H_ij - conj(H_ji)| <= tol * max|H|.
  static Hamiltonian from_matrix(const Eigen::SparseMatrix<Complex>& full,
                                 std::string energy_unit = "Hartree", double tol = 1e-12);

 private:
  Index dim_;
  std::vector<MatrixEntry> entries_;
  std::string energy_unit_;
  bool is_real_ = true;
};

/// Normalized state, ||psi||_2 = 1 within 1e-10.
class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes);

  /// Scales a non-zero vector to unit norm.
  static StateVector normalized(const Eigen::VectorXcd& amplitudes);
  static StateVector basis(Index dim, Index index);

  Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// Dimension cap for spectral work: GSPGATE_MAX_DIM, default 16384.
Index max_dim_from_env();

}  // namespace gspgate
