#pragma once

// Runtime models for ground-state energy estimation (GSEE) driven by a
// ground-state preparation (GSP) routine.
//
// A GSEE algorithm is characterised by two exponents: the number of
// repetitions scales as 1/γ^α and the depth of each repetition as 1/(εγ^β),
// where γ is the overlap amplitude of the prepared state with the ground
// state and ε the target accuracy. Constant factors and logarithms are
// dropped; `GseeModel::prefactor` is an overall multiplier kept at 1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gspgate {

/// Tag for the unit in which circuit depth is counted. Two depths can only
/// be added when their tags compare equal.
class DepthUnit {
 public:
  /// Accepts "circuit-layers", "controlled-evolutions", "t-count" or
  /// "custom:<tag>". Throws DomainError otherwise.
  static DepthUnit parse(std::string_view text);

  static DepthUnit circuit_layers() { return DepthUnit("circuit-layers"); }
  static DepthUnit controlled_evolutions() { return DepthUnit("controlled-evolutions"); }
  static DepthUnit t_count() { return DepthUnit("t-count"); }

  const std::string& str() const { return tag_; }
  bool operator==(const DepthUnit&) const = default;

 private:
  explicit DepthUnit(std::string tag) : tag_(std::move(tag)) {}
  std::string tag_;
};

struct GseeModel {
  std::string name;
  double alpha = 0.0;  // repetition exponent
  double beta = 0.0;   // per-repetition depth exponent
  DepthUnit depth_unit = DepthUnit::circuit_layers();
  double prefactor = 1.0;

  double exponent_sum() const { return alpha + beta; }
};

/// Validates α ≥ 0, β ≥ 0 and a positive finite prefactor.
void validate(const GseeModel& model);

struct GspCandidate {
  std::string name;
  double depth = 0.0;
  double gamma = 1.0;
  double p_succ = 1.0;
  DepthUnit depth_unit = DepthUnit::circuit_layers();
};

void validate(const GspCandidate& cand);

/// Zero-depth reference preparation (e.g. a Hartree-Fock determinant).
struct Reference {
  double gamma0 = 1.0;
  static constexpr double depth = 0.0;
};

void validate(const Reference& ref);

struct Accuracy {
  double epsilon = 1e-3;
};

void validate(const Accuracy& acc);

/// Depth of one GSEE run measured directly, bypassing 1/(εγ^β).
struct GseeDepth {
  double value = 0.0;
};

// --- catalog -------------------------------------------------------------

/// Built-in GSEE algorithms: "qpe" (α=2, β=2) and "lt20" (α=0, β=1).
const std::vector<GseeModel>& gsee_catalog();

/// Case-insensitive catalog lookup; the returned model carries `unit`.
std::optional<GseeModel> find_gsee(std::string_view name,
                                   DepthUnit unit = DepthUnit::circuit_layers());

/// Exponent values seen across published GSEE algorithms.
inline constexpr double kCatalogAlphas[] = {0.0, 2.0, 4.0};
inline constexpr double kCatalogBetas[] = {0.0, 1.0, 2.0};

// --- runtime formulas ----------------------------------------------------

/// 1/(ε·γ^β)
double gsee_depth(const GseeModel& model, const Accuracy& acc, double gamma);

/// 1/γ^α. Not rounded up: repetition counts stay real-valued.
double repetitions(const GseeModel& model, double gamma);

/// (1/γ^α)·(D + 1/(εγ^β)). GSP repetitions are not included.
double runtime_total(const GseeModel& model, const GspCandidate& cand,
                     const Accuracy& acc);

/// 1/(ε·γ₀^{α+β}), evaluated as repetitions(γ₀)·gsee_depth(γ₀) so that a
/// zero-depth candidate with γ = γ₀ reproduces it bit for bit.
double runtime_reference(const GseeModel& model, const Reference& ref,
                         const Accuracy& acc);

/// (1/γ^α)·(D/P_succ + 1/(εγ^β))
double runtime_with_reps(const GseeModel& model, const GspCandidate& cand,
                         const Accuracy& acc);

/// Variants taking the per-run GSEE depth at γ directly. The reference run
/// then has depth d_gsee·(γ/γ₀)^β.
double runtime_with_reps(const GseeModel& model, const GspCandidate& cand,
                         GseeDepth d_gsee);
double runtime_reference(const GseeModel& model, const GspCandidate& cand,
                         const Reference& ref, GseeDepth d_gsee);

/// Throws UnitMismatchError when the two tags differ.
void require_same_unit(const GseeModel& model, const GspCandidate& cand);

}  // namespace gspgate
