#pragma once

// Lowest-eigenpair solvers for Hermitian matrices, templated on the scalar
// type (double or std::complex<double>).
//
// dense_spectrum: full diagonalization, used directly for small problems and
//   as the reference for the iterative path.
// lowest_levels: matrix-vector products only. Each level is found by a
//   thick-restarted Krylov/Rayleigh-Ritz iteration in the orthogonal
//   complement of the already converged (locked) eigenvectors, so degenerate
//   ground spaces are recovered one vector at a time.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>
#include <type_traits>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "gspgate/errors.hpp"

namespace gspgate {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Eigenvalues ascending; column k of `vectors` belongs to values(k).
template <typename Scalar>
struct EigenLevels {
  Eigen::VectorXd values;
  DenseMatrix<Scalar> vectors;
};

template <typename Scalar>
EigenLevels<Scalar> dense_spectrum(const DenseMatrix<Scalar>& h) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

struct IterativeOptions {
  Eigen::Index krylov_dim = 64;       // basis size before a thick restart
  Eigen::Index keep_on_restart = 16;  // Ritz vectors retained across a restart
  double residual_tol = 1e-12;        // relative to the norm estimate
  int max_matvecs = 200000;
  std::uint64_t seed = 0x5eed'6a7e'0000'0001ULL;
};

namespace detail {

template <typename Scalar>
DenseVector<Scalar> random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  DenseVector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      v(i) = normal(rng);
    } else {
      v(i) = Scalar(normal(rng), normal(rng));
    }
  }
  return v;
}

// Two passes of classical Gram-Schmidt against the columns of `basis`.
template <typename Scalar, typename Basis>
void orthogonalize(DenseVector<Scalar>& v, const Basis& basis) {
  if (basis.cols() == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    v -= basis * (basis.adjoint() * v);
  }
}

struct Level {
  double value;
  bool converged;
};

// Lowest eigenpair of h restricted to the complement of `locked`.
template <typename Scalar, typename MatVec>
Level lowest_in_complement(const MatVec& apply, Eigen::Index n,
                           const DenseMatrix<Scalar>& locked, double norm_estimate,
                           const IterativeOptions& opts, std::mt19937_64& rng,
                           int& matvecs, DenseVector<Scalar>& ritz_vector) {
  const Eigen::Index free_dim = n - locked.cols();
  const Eigen::Index m_max = std::min<Eigen::Index>(std::max<Eigen::Index>(opts.krylov_dim, 2), free_dim);
  const Eigen::Index keep = std::clamp<Eigen::Index>(opts.keep_on_restart, 1, std::max<Eigen::Index>(m_max - 1, 1));
  const double tol = opts.residual_tol * std::max(norm_estimate, 1e-300);

  DenseMatrix<Scalar> basis(n, m_max);
  DenseMatrix<Scalar> image(n, m_max);
  Eigen::Index cols = 0;

  DenseVector<Scalar> next = random_vector<Scalar>(n, rng);
  orthogonalize<Scalar>(next, locked);

  double theta = 0.0;
  double best_residual = std::numeric_limits<double>::infinity();
  int stagnant = 0;
  while (true) {
    double nrm = next.norm();
    if (nrm < 1e-10) {
      // Residual direction lost to rounding; continue from a fresh vector.
      next = random_vector<Scalar>(n, rng);
      orthogonalize<Scalar>(next, locked);
      orthogonalize<Scalar>(next, basis.leftCols(cols));
      nrm = next.norm();
    }
    basis.col(cols) = next / nrm;
    image.col(cols) = apply(basis.col(cols));
    ++matvecs;
    ++cols;

    DenseMatrix<Scalar> projected = basis.leftCols(cols).adjoint() * image.leftCols(cols);
    projected = (0.5 * (projected + projected.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> small(projected);
    theta = small.eigenvalues()(0);
    const DenseVector<Scalar> s = small.eigenvectors().col(0);
    ritz_vector = basis.leftCols(cols) * s;
    DenseVector<Scalar> residual = image.leftCols(cols) * s - theta * ritz_vector;
    orthogonalize<Scalar>(residual, locked);
    const double res_norm = residual.norm();

    // Exhausting the free space makes the Rayleigh-Ritz step exact.
    if (res_norm <= tol || cols == free_dim) {
      ritz_vector.normalize();
      return {theta, true};
    }
    if (res_norm < 0.5 * best_residual) {
      best_residual = res_norm;
      stagnant = 0;
    } else if (++stagnant > 50 && res_norm <= 1e3 * tol) {
      // Rounding floor reached: accept when within three digits of tol.
      ritz_vector.normalize();
      return {theta, true};
    }
    if (matvecs >= opts.max_matvecs) {
      ritz_vector.normalize();
      return {theta, false};
    }

    if (cols == m_max) {
      const Eigen::Index k = std::min(keep, cols - 1);
      const DenseMatrix<Scalar> s_keep = small.eigenvectors().leftCols(k);
      const DenseMatrix<Scalar> new_basis = basis.leftCols(cols) * s_keep;
      const DenseMatrix<Scalar> new_image = image.leftCols(cols) * s_keep;
      basis.leftCols(k) = new_basis;
      image.leftCols(k) = new_image;
      cols = k;
    }
    next = residual;
    orthogonalize<Scalar>(next, basis.leftCols(cols));
    orthogonalize<Scalar>(next, locked);
  }
}

}  // namespace detail

/// Lowest levels of a Hermitian operator given as a sparse matrix. Locks
/// eigenvectors while their eigenvalue stays below values(0) + degeneracy_tol
/// and stops after the first level above that window, which is kept in
/// `values` (not in `vectors`) so the caller can read off the gap. When the
/// whole space is degenerate no excited level is returned.
template <typename Scalar>
EigenLevels<Scalar> lowest_levels(const Eigen::SparseMatrix<Scalar>& h, double degeneracy_tol,
                                  const IterativeOptions& opts = {}) {
  const Eigen::Index n = h.rows();
  double norm_estimate = 0.0;
  for (Eigen::Index k = 0; k < h.outerSize(); ++k) {
    double col_sum = 0.0;
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(h, k); it; ++it) {
      col_sum += std::abs(it.value());
    }
    norm_estimate = std::max(norm_estimate, col_sum);
  }
  auto apply = [&h](const auto& v) -> DenseVector<Scalar> { return h * v; };

  std::mt19937_64 rng(opts.seed);
  int matvecs = 0;
  DenseMatrix<Scalar> locked(n, 0);
  std::vector<double> values;
  DenseVector<Scalar> ritz;

  while (locked.cols() < n) {
    const detail::Level level = detail::lowest_in_complement<Scalar>(
        apply, n, locked, norm_estimate, opts, rng, matvecs, ritz);
    if (!level.converged) {
      throw ConvergenceError("iterative eigensolver did not converge within " +
                             std::to_string(opts.max_matvecs) + " matrix-vector products");
    }
    values.push_back(level.value);
    const double e0 = values.front();
    if (locked.cols() > 0 && level.value >= e0 + degeneracy_tol) break;
    locked.conservativeResize(n, locked.cols() + 1);
    detail::orthogonalize<Scalar>(ritz, locked.leftCols(locked.cols() - 1));
    locked.col(locked.cols() - 1) = ritz.normalized();
  }

  EigenLevels<Scalar> out;
  out.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  out.vectors = std::move(locked);
  return out;
}

}  // namespace gspgate
