#pragma once

// Acceptability of a GSP method against a zero-depth reference.
//
// A candidate (depth D, overlap γ, success probability P_succ) is accepted
// when the total GSEE runtime it induces is strictly below the runtime with
// the reference state (overlap γ₀). The decisive comparison is reported in
// ratio form,
//
//     (D/P_succ + G) / G  <  (γ/γ₀)^{α+β},      G = 1/(εγ^β),
//
// i.e. "total depth / GSEE depth" against the ratio of repetition counts.
// The equivalent runtime comparison T < T₀ is carried in Verdict::detail.

#include <map>
#include <string>
#include <vector>

#include "gspgate/runtime_model.hpp"

namespace gspgate {

enum class Regime { general, simplified, with_repetitions };

std::string to_string(Regime regime);

struct Verdict {
  bool accepted = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  Regime regime = Regime::general;
  std::vector<std::string> warnings;
  // runtime, runtime_ref, total_depth, gsee_depth, overlap_ratio,
  // ratio_lhs, ratio_rhs, runtime_accepted (0/1)
  std::map<std::string, double> detail;
};

/// Gap-dependent booster whose depth is modeled as 1/(Δ·γ₀). The form is
/// inferred: it is the depth that turns the ratio criterion for QPE into
/// (εγ² + Δγ₀)/(Δγ₀) < (γ/γ₀)⁴.
struct BoosterGspModel {
  double delta = 1.0;
  double gamma0 = 1.0;
};

/// Upper bound on acceptable GSP depth. `value` is 0 when no positive depth
/// can be accepted; the reason is then listed in `warnings`.
struct DepthBound {
  double value = 0.0;
  std::vector<std::string> warnings;
};

inline constexpr double kDefaultNegligibility = 0.01;

/// T < T₀ without GSP repetitions (P_succ is treated as 1).
Verdict verdict_general(const GseeModel& model, const GspCandidate& cand,
                        const Reference& ref, const Accuracy& acc);
Verdict verdict_general(const GseeModel& model, const GspCandidate& cand,
                        const Reference& ref, GseeDepth d_gsee);

/// T < T₀ where failed GSP attempts are repeated 1/P_succ times. With
/// P_succ = 1 the result is identical to verdict_general.
Verdict verdict_with_reps(const GseeModel& model, const GspCandidate& cand,
                          const Reference& ref, const Accuracy& acc);
Verdict verdict_with_reps(const GseeModel& model, const GspCandidate& cand,
                          const Reference& ref, GseeDepth d_gsee);

/// Small-depth regime: when D·γ^β·ε (GSP depth over GSEE depth) is at most
/// `negligibility`, the criterion reduces to 1 < (γ/γ₀)^{α+β}. Throws
/// RegimeError otherwise.
Verdict verdict_simplified(const GseeModel& model, const GspCandidate& cand,
                           const Reference& ref, const Accuracy& acc,
                           double negligibility = kDefaultNegligibility);
Verdict verdict_simplified(const GseeModel& model, const GspCandidate& cand,
                           const Reference& ref, GseeDepth d_gsee,
                           double negligibility = kDefaultNegligibility);

/// Simplified criterion from the overlap ratio γ/γ₀ alone. γ is unknown, so
/// the regime guard uses the γ = 1 worst case D·ε ≤ negligibility.
Verdict verdict_from_ratio(const GseeModel& model, double overlap_ratio, double depth,
                           const Accuracy& acc,
                           double negligibility = kDefaultNegligibility);
/// Same, with a known GSEE depth: the guard becomes D/d_gsee ≤ negligibility.
Verdict verdict_from_ratio(const GseeModel& model, double overlap_ratio, double depth,
                           GseeDepth d_gsee,
                           double negligibility = kDefaultNegligibility);

/// P_succ·(1/(εγ^β))·((γ/γ₀)^{α+β} − 1)
DepthBound max_depth(const GseeModel& model, double gamma, const Reference& ref,
                     const Accuracy& acc, double p_succ = 1.0);
DepthBound max_depth(const GseeModel& model, double gamma, const Reference& ref,
                     GseeDepth d_gsee, double p_succ = 1.0);

/// ((γ − γ₀)/γ₀)·D_GSEE, the bound for α + β = 1 with a given GSEE depth.
DepthBound max_depth_strict(double gamma, double gamma0, double d_gsee);

/// 1/(Δ·γ₀)
double booster_depth_model(const BoosterGspModel& booster);

struct ModelOutcome {
  std::string model;
  double lhs = 0.0;
  double rhs = 0.0;
  bool accepted = false;
};

struct StrictnessReport {
  ModelOutcome a;
  ModelOutcome b;
  int stricter = -1;  // 0: a, 1: b, -1: indistinguishable
  bool implication_holds = true;  // stricter accepts => laxer accepts
};

/// Evaluates one candidate under two GSEE models. The stricter model is the
/// one with the larger lhs/rhs ratio on these inputs.
StrictnessReport strictness_order(const GseeModel& model_a, const GseeModel& model_b,
                                  const GspCandidate& cand, const Reference& ref,
                                  const Accuracy& acc);

}  // namespace gspgate
