#include "gspgate/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "gspgate/errors.hpp"

namespace gspgate {

Hamiltonian::Hamiltonian(Index dim, std::vector<MatrixEntry> upper, std::string energy_unit)
    : dim_(dim), entries_(std::move(upper)), energy_unit_(std::move(energy_unit)) {
  if (dim_ <= 0) throw DomainError("Hamiltonian dimension must be positive");
  for (const auto& e : entries_) {
    if (e.row < 0 || e.col < 0 || e.row >= dim_ || e.col >= dim_) {
      throw DomainError("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                        ") out of range for dim " + std::to_string(dim_));
    }
    if (e.row > e.col) {
      throw DomainError("lower-triangle entry (" + std::to_string(e.row) + ", " +
                        std::to_string(e.col) + ") violates the row <= col convention");
    }
    if (e.row == e.col && e.value.imag() != 0.0) {
      throw DomainError("diagonal entry " + std::to_string(e.row) +
                        " has a non-zero imaginary part");
    }
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      throw DomainError("non-finite coefficient");
    }
    if (e.value.imag() != 0.0) is_real_ = false;
  }
  std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                [](const MatrixEntry& a, const MatrixEntry& b) {
                                  return a.row == b.row && a.col == b.col;
                                });
  if (dup != entries_.end()) {
    throw DomainError("duplicate entry (" + std::to_string(dup->row) + ", " +
                      std::to_string(dup->col) + ")");
  }
}

Eigen::SparseMatrix<Complex> Hamiltonian::sparse() const {
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(2 * entries_.size());
  for (const auto& e : entries_) {
    t.emplace_back(e.row, e.col, e.value);
    if (e.row != e.col) t.emplace_back(e.col, e.row, std::conj(e.value));
  }
  Eigen::SparseMatrix<Complex> m(dim_, dim_);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

Eigen::SparseMatrix<double> Hamiltonian::sparse_real() const {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(2 * entries_.size());
  for (const auto& e : entries_) {
    t.emplace_back(e.row, e.col, e.value.real());
    if (e.row != e.col) t.emplace_back(e.col, e.row, e.value.real());
  }
  Eigen::SparseMatrix<double> m(dim_, dim_);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

Eigen::MatrixXcd Hamiltonian::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& e : entries_) {
    m(e.row, e.col) = e.value;
    m(e.col, e.row) = std::conj(e.value);
  }
  return m;
}

double Hamiltonian::norm_bound() const {
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(dim_);
  for (const auto& e : entries_) {
    row_sums(e.row) += std::abs(e.value);
    if (e.row != e.col) row_sums(e.col) += std::abs(e.value);
  }
  return row_sums.maxCoeff();
}

Hamiltonian Hamiltonian::from_matrix(const Eigen::SparseMatrix<Complex>& full,
                                     std::string energy_unit, double tol) {
  if (full.rows() != full.cols()) throw DomainError("Hamiltonian matrix must be square");
  double scale = 0.0;
  for (int k = 0; k < full.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(full, k); it; ++it) {
      scale = std::max(scale, std::abs(it.value()));
    }
  }
  const Eigen::SparseMatrix<Complex> adjoint = full.adjoint();
  const Eigen::SparseMatrix<Complex> diff = full - adjoint;
  double mismatch = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(diff, k); it; ++it) {
      mismatch = std::max(mismatch, std::abs(it.value()));
    }
  }
  if (mismatch > tol * scale) {
    throw DomainError("operator is not Hermitian (max |H - H^dagger| = " +
                      std::to_string(mismatch) + ")");
  }
  std::vector<MatrixEntry> upper;
  for (int k = 0; k < full.outerSize(); ++k) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(full, k); it; ++it) {
      if (it.row() > it.col() || it.value() == Complex{}) continue;
      Complex v = it.value();
      if (it.row() == it.col()) v = Complex(v.real(), 0.0);
      upper.push_back({it.row(), it.col(), v});
    }
  }
  return Hamiltonian(full.rows(), std::move(upper), std::move(energy_unit));
}

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DomainError("state vector must be non-empty");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
    throw DomainError("state vector is not normalized (norm " +
                      std::to_string(amplitudes_.norm()) + ")");
  }
}

StateVector StateVector::normalized(const Eigen::VectorXcd& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero vector");
  return StateVector(amplitudes / n);
}

StateVector StateVector::basis(Index dim, Index index) {
  if (index < 0 || index >= dim) {
    throw DomainError("basis index " + std::to_string(index) + " out of range for dim " +
                      std::to_string(dim));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

Index max_dim_from_env() {
  constexpr Index kDefault = 16384;
  const char* env = std::getenv("GSPGATE_MAX_DIM");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) {
    throw DomainError(std::string("GSPGATE_MAX_DIM must be a positive integer, got '") + env + "'");
  }
  return static_cast<Index>(v);
}

}  // namespace gspgate
