#pragma once

// Exact spectral oracle for small Hamiltonians: ground energy, gap, ground
// space, overlap amplitudes and monotone spectral filters.

#include <string>
#include <vector>

#include "gspgate/eigensolvers.hpp"
#include "gspgate/hamiltonian.hpp"

namespace gspgate {

enum class SolverPath { automatic, dense, iterative };

std::string to_string(SolverPath path);

struct SolverOptions {
  SolverPath path = SolverPath::automatic;
  Index dense_limit = 1024;  // automatic: dense up to and including this dim
  Index max_dim = max_dim_from_env();
  IterativeOptions iterative{};
};

struct SpectralResult {
  double e0 = 0.0;
  double gap = 0.0;                 // E1 - E0; 0 if no level lies above the ground space
  Eigen::MatrixXcd ground_subspace; // orthonormal columns
  double degeneracy_tol = 1e-8;
  SolverPath path_used = SolverPath::dense;
};

inline constexpr double kDefaultDegeneracyTol = 1e-8;

/// Ground space = all eigenvectors with eigenvalue < E0 + degeneracy_tol.
SpectralResult ground_state(const Hamiltonian& h, double degeneracy_tol = kDefaultDegeneracyTol,
                            const SolverOptions& opts = {});

struct Overlap {
  double gamma = 0.0;  // norm of the projection onto the ground space
  double eta = 0.0;    // gamma^2
};

Overlap overlap(const StateVector& prepared, const SpectralResult& spec);

/// Overlap of the computational-basis state |basis_index> with the ground
/// space; models a single-determinant reference.
double reference_overlap(const Hamiltonian& h, Index basis_index,
                         double degeneracy_tol = kDefaultDegeneracyTol,
                         const SolverOptions& opts = {});

enum class FilterKind { gaussian, exponential, step };

std::string to_string(FilterKind kind);

/// f(E) for a monotone booster:
///   gaussian     exp(-(E - center)^2 / (2 width^2)), requires center <= E0
///   exponential  exp(-rate (E - center))
///   step         1 for E <= center, 0 above
struct FilterSpec {
  FilterKind kind = FilterKind::gaussian;
  double center = 0.0;
  double width = 1.0;  // gaussian sigma; exponential rate; unused for step

  static FilterSpec gaussian(double center, double sigma) { return {FilterKind::gaussian, center, sigma}; }
  static FilterSpec exponential(double pivot, double rate) { return {FilterKind::exponential, pivot, rate}; }
  static FilterSpec step(double cutoff) { return {FilterKind::step, cutoff, 0.0}; }
};

/// Throws DomainError unless f is positive (step: non-negative with f(E0) = 1)
/// and non-increasing on [e0, e_max].
void validate(const FilterSpec& f, double e0);

struct BoostResult {
  StateVector boosted;
  double gamma_before = 0.0;
  double gamma_after = 0.0;
};

/// Largest dimension boost_filter will diagonalize in full.
inline constexpr Index kBoostDenseLimit = 4096;

/// normalize(f(H) prepared), computed through a full eigendecomposition.
BoostResult boost_filter(const Hamiltonian& h, const StateVector& prepared, const FilterSpec& f,
                         double degeneracy_tol = kDefaultDegeneracyTol);

}  // namespace gspgate
