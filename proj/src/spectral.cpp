#include "gspgate/spectral.hpp"

#include <cmath>
#include <limits>

#include "gspgate/errors.hpp"

namespace gspgate {

namespace {

void check_dim(const Hamiltonian& h, Index cap) {
  if (h.dim() > cap) {
    throw ResourceError("dimension " + std::to_string(h.dim()) + " exceeds the cap " +
                        std::to_string(cap) + " (GSPGATE_MAX_DIM)");
  }
}

template <typename Scalar>
SpectralResult from_dense(const EigenLevels<Scalar>& levels, double tol) {
  SpectralResult r;
  r.degeneracy_tol = tol;
  r.path_used = SolverPath::dense;
  r.e0 = levels.values(0);
  Index k = 0;
  while (k < levels.values.size() && levels.values(k) < r.e0 + tol) ++k;
  r.gap = k < levels.values.size() ? levels.values(k) - r.e0 : 0.0;
  r.ground_subspace = levels.vectors.leftCols(k).template cast<Complex>();
  return r;
}

template <typename Scalar>
SpectralResult from_iterative(const EigenLevels<Scalar>& levels, double tol) {
  SpectralResult r;
  r.degeneracy_tol = tol;
  r.path_used = SolverPath::iterative;
  const Index k = levels.vectors.cols();
  r.e0 = levels.values.head(k).minCoeff();
  r.gap = levels.values.size() > k ? levels.values(k) - r.e0 : 0.0;
  r.ground_subspace = levels.vectors.template cast<Complex>();
  return r;
}

// Full spectrum, real arithmetic when the Hamiltonian allows it.
EigenLevels<Complex> full_spectrum(const Hamiltonian& h) {
  if (h.is_real()) {
    const Eigen::MatrixXd dense = Eigen::MatrixXd(h.sparse_real());
    auto levels = dense_spectrum<double>(dense);
    return {std::move(levels.values), levels.vectors.cast<Complex>()};
  }
  return dense_spectrum<Complex>(h.dense());
}

double projection_norm(const Eigen::VectorXcd& coeffs, Index ground_count) {
  return coeffs.head(ground_count).norm();
}

}  // namespace

std::string to_string(SolverPath path) {
  switch (path) {
    case SolverPath::automatic:
      return "automatic";
    case SolverPath::dense:
      return "dense";
    case SolverPath::iterative:
      return "iterative";
  }
  return "unknown";
}

std::string to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::gaussian:
      return "gaussian";
    case FilterKind::exponential:
      return "exponential";
    case FilterKind::step:
      return "step";
  }
  return "unknown";
}

SpectralResult ground_state(const Hamiltonian& h, double degeneracy_tol, const SolverOptions& opts) {
  check_dim(h, opts.max_dim);
  if (!(degeneracy_tol >= 0.0)) throw DomainError("degeneracy tolerance must be non-negative");
  SolverPath path = opts.path;
  if (path == SolverPath::automatic) {
    path = h.dim() <= opts.dense_limit ? SolverPath::dense : SolverPath::iterative;
  }
  if (path == SolverPath::dense) {
    if (h.is_real()) {
      return from_dense(dense_spectrum<double>(Eigen::MatrixXd(h.sparse_real())), degeneracy_tol);
    }
    return from_dense(dense_spectrum<Complex>(h.dense()), degeneracy_tol);
  }
  if (h.is_real()) {
    return from_iterative(lowest_levels<double>(h.sparse_real(), degeneracy_tol, opts.iterative),
                          degeneracy_tol);
  }
  return from_iterative(lowest_levels<Complex>(h.sparse(), degeneracy_tol, opts.iterative),
                        degeneracy_tol);
}

Overlap overlap(const StateVector& prepared, const SpectralResult& spec) {
  if (prepared.dim() != spec.ground_subspace.rows()) {
    throw DomainError("state dimension " + std::to_string(prepared.dim()) +
                      " does not match Hamiltonian dimension " +
                      std::to_string(spec.ground_subspace.rows()));
  }
  const Eigen::VectorXcd proj = spec.ground_subspace.adjoint() * prepared.amplitudes();
  Overlap o;
  o.gamma = std::min(proj.norm(), 1.0);
  o.eta = o.gamma * o.gamma;
  return o;
}

double reference_overlap(const Hamiltonian& h, Index basis_index, double degeneracy_tol,
                         const SolverOptions& opts) {
  if (basis_index < 0 || basis_index >= h.dim()) {
    throw DomainError("basis index " + std::to_string(basis_index) + " out of range for dim " +
                      std::to_string(h.dim()));
  }
  const SpectralResult spec = ground_state(h, degeneracy_tol, opts);
  return overlap(StateVector::basis(h.dim(), basis_index), spec).gamma;
}

void validate(const FilterSpec& f, double e0) {
  if (!std::isfinite(f.center)) throw DomainError("filter center must be finite");
  switch (f.kind) {
    case FilterKind::gaussian:
      if (!(f.width > 0.0) || !std::isfinite(f.width)) {
        throw DomainError("gaussian filter width must be positive");
      }
      if (f.center > e0) {
        throw DomainError("gaussian filter centered above E0 is not monotone on the spectrum");
      }
      break;
    case FilterKind::exponential:
      if (!(f.width > 0.0) || !std::isfinite(f.width)) {
        throw DomainError("exponential filter rate must be positive");
      }
      break;
    case FilterKind::step:
      if (f.center < e0) {
        throw DomainError("step filter cutoff below E0 annihilates the ground space");
      }
      break;
  }
}

BoostResult boost_filter(const Hamiltonian& h, const StateVector& prepared, const FilterSpec& f,
                         double degeneracy_tol) {
  if (prepared.dim() != h.dim()) {
    throw DomainError("state dimension does not match Hamiltonian dimension");
  }
  if (h.dim() > kBoostDenseLimit) {
    throw ResourceError("boost_filter diagonalizes in full; dimension " + std::to_string(h.dim()) +
                        " exceeds " + std::to_string(kBoostDenseLimit));
  }
  const EigenLevels<Complex> levels = full_spectrum(h);
  const double e0 = levels.values(0);
  validate(f, e0);

  Index ground = 0;
  while (ground < levels.values.size() && levels.values(ground) < e0 + degeneracy_tol) ++ground;

  const Eigen::VectorXcd coeffs = levels.vectors.adjoint() * prepared.amplitudes();
  const double gamma_before = std::min(projection_norm(coeffs, ground), 1.0);
  if (!(gamma_before > 1e-12)) {
    throw ZeroProjectionError("prepared state has no ground-space component; a spectral filter cannot recover it");
  }

  // f(E)/f(E0) in log space so that steep filters do not underflow at E0.
  Eigen::VectorXcd filtered(coeffs.size());
  for (Index i = 0; i < coeffs.size(); ++i) {
    const double e = levels.values(i);
    double log_w = 0.0;
    switch (f.kind) {
      case FilterKind::gaussian: {
        const double s2 = 2.0 * f.width * f.width;
        log_w = -((e - f.center) * (e - f.center) - (e0 - f.center) * (e0 - f.center)) / s2;
        break;
      }
      case FilterKind::exponential:
        log_w = -f.width * (e - e0);
        break;
      case FilterKind::step:
        log_w = e <= f.center ? 0.0 : -std::numeric_limits<double>::infinity();
        break;
    }
    filtered(i) = std::exp(log_w) * coeffs(i);
  }

  const double total = filtered.norm();
  BoostResult r{StateVector::normalized(levels.vectors * filtered), gamma_before, 0.0};
  r.gamma_after = std::min(projection_norm(filtered, ground) / total, 1.0);
  return r;
}

}  // namespace gspgate
