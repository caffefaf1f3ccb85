#include "gspgate/criteria.hpp"

#include <cmath>
#include <cstdio>

#include "gspgate/errors.hpp"

namespace gspgate {

namespace {

constexpr const char* kZeroExponentWarning =
    "alpha+beta=0: the reference cannot be beaten by any positive-depth candidate";

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void require_positive_depth(GseeDepth d) {
  if (!(d.value > 0.0) || !std::isfinite(d.value)) {
    throw DomainError("GSEE depth must be positive, got " + fmt_g(d.value));
  }
}

// Shared core of the general and repetition-aware criteria. `reps_gsp` is the
// number of GSP attempts per GSEE run (1 or 1/P_succ).
Verdict evaluate(const GseeModel& model, const GspCandidate& cand, const Reference& ref,
                 double d_gsee, double gsp_depth, double runtime_ref, Regime regime) {
  const double total_depth = gsp_depth + d_gsee;
  const double overlap_ratio = cand.gamma / ref.gamma0;

  Verdict v;
  v.regime = regime;
  v.lhs = total_depth / d_gsee;
  v.rhs = std::pow(overlap_ratio, model.exponent_sum());
  v.margin = v.rhs - v.lhs;
  v.accepted = v.lhs < v.rhs;

  const double runtime = model.prefactor * repetitions(model, cand.gamma) * total_depth;
  const bool runtime_accepted = runtime < runtime_ref;

  v.detail["runtime"] = runtime;
  v.detail["runtime_ref"] = runtime_ref;
  v.detail["runtime_accepted"] = runtime_accepted ? 1.0 : 0.0;
  v.detail["total_depth"] = total_depth;
  v.detail["gsee_depth"] = d_gsee;
  v.detail["gsp_depth"] = gsp_depth;
  v.detail["overlap_ratio"] = overlap_ratio;
  v.detail["ratio_lhs"] = v.lhs;
  v.detail["ratio_rhs"] = v.rhs;

  if (model.exponent_sum() == 0.0) v.warnings.emplace_back(kZeroExponentWarning);
  if (runtime_accepted != v.accepted) {
    v.warnings.emplace_back("runtime and ratio forms disagree at rounding level");
  }
  return v;
}

void check_inputs(const GseeModel& model, const GspCandidate& cand, const Reference& ref) {
  validate(model);
  validate(cand);
  validate(ref);
  require_same_unit(model, cand);
}

Verdict with_reps_core(const GseeModel& model, const GspCandidate& cand,
                       const Reference& ref, double d_gsee, double runtime_ref,
                       double p_succ) {
  const Regime regime = p_succ < 1.0 ? Regime::with_repetitions : Regime::general;
  return evaluate(model, cand, ref, d_gsee, cand.depth / p_succ, runtime_ref, regime);
}

Verdict simplified_core(const GseeModel& model, const GspCandidate& cand,
                        const Reference& ref, double d_gsee, double negligibility) {
  const double ratio = cand.depth / d_gsee;
  if (!(ratio <= negligibility)) {
    throw RegimeError("small-depth regime does not apply: GSP/GSEE depth ratio " +
                          fmt_g(ratio) + " exceeds " + fmt_g(negligibility),
                      ratio);
  }
  Verdict v;
  v.regime = Regime::simplified;
  v.lhs = 1.0;
  v.rhs = std::pow(cand.gamma / ref.gamma0, model.exponent_sum());
  v.margin = v.rhs - v.lhs;
  v.accepted = v.lhs < v.rhs;
  v.detail["depth_ratio"] = ratio;
  v.detail["gsee_depth"] = d_gsee;
  v.detail["gsp_depth"] = cand.depth;
  v.detail["overlap_ratio"] = cand.gamma / ref.gamma0;
  if (model.exponent_sum() == 0.0) v.warnings.emplace_back(kZeroExponentWarning);
  return v;
}

DepthBound bound_core(const GseeModel& model, double gamma, const Reference& ref,
                      double d_gsee, double p_succ) {
  if (!(p_succ > 0.0 && p_succ <= 1.0)) {
    throw DomainError("p_succ must lie in (0, 1], got " + fmt_g(p_succ));
  }
  DepthBound b;
  if (gamma < ref.gamma0) {
    b.warnings.emplace_back("gamma < gamma0: no positive depth is acceptable");
    return b;
  }
  if (model.exponent_sum() == 0.0) {
    b.warnings.emplace_back(kZeroExponentWarning);
    return b;
  }
  b.value = p_succ * d_gsee * (std::pow(gamma / ref.gamma0, model.exponent_sum()) - 1.0);
  return b;
}

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::general:
      return "general";
    case Regime::simplified:
      return "simplified";
    case Regime::with_repetitions:
      return "with-repetitions";
  }
  return "unknown";
}

Verdict verdict_general(const GseeModel& model, const GspCandidate& cand,
                        const Reference& ref, const Accuracy& acc) {
  GspCandidate single = cand;
  single.p_succ = 1.0;
  return verdict_with_reps(model, single, ref, acc);
}

Verdict verdict_general(const GseeModel& model, const GspCandidate& cand,
                        const Reference& ref, GseeDepth d_gsee) {
  GspCandidate single = cand;
  single.p_succ = 1.0;
  return verdict_with_reps(model, single, ref, d_gsee);
}

Verdict verdict_with_reps(const GseeModel& model, const GspCandidate& cand,
                          const Reference& ref, const Accuracy& acc) {
  check_inputs(model, cand, ref);
  validate(acc);
  return with_reps_core(model, cand, ref, gsee_depth(model, acc, cand.gamma),
                        runtime_reference(model, ref, acc), cand.p_succ);
}

Verdict verdict_with_reps(const GseeModel& model, const GspCandidate& cand,
                          const Reference& ref, GseeDepth d_gsee) {
  check_inputs(model, cand, ref);
  require_positive_depth(d_gsee);
  return with_reps_core(model, cand, ref, d_gsee.value,
                        runtime_reference(model, cand, ref, d_gsee), cand.p_succ);
}

Verdict verdict_simplified(const GseeModel& model, const GspCandidate& cand,
                           const Reference& ref, const Accuracy& acc,
                           double negligibility) {
  check_inputs(model, cand, ref);
  validate(acc);
  return simplified_core(model, cand, ref, gsee_depth(model, acc, cand.gamma), negligibility);
}

Verdict verdict_simplified(const GseeModel& model, const GspCandidate& cand,
                           const Reference& ref, GseeDepth d_gsee, double negligibility) {
  check_inputs(model, cand, ref);
  require_positive_depth(d_gsee);
  return simplified_core(model, cand, ref, d_gsee.value, negligibility);
}

Verdict verdict_from_ratio(const GseeModel& model, double overlap_ratio, double depth,
                           const Accuracy& acc, double negligibility) {
  validate(acc);
  // γ ≤ 1 makes 1/ε the smallest possible GSEE depth, so D·ε bounds D/G.
  return verdict_from_ratio(model, overlap_ratio, depth, GseeDepth{1.0 / acc.epsilon},
                            negligibility);
}

Verdict verdict_from_ratio(const GseeModel& model, double overlap_ratio, double depth,
                           GseeDepth d_gsee, double negligibility) {
  validate(model);
  require_positive_depth(d_gsee);
  if (!(overlap_ratio > 0.0) || !std::isfinite(overlap_ratio)) {
    throw DomainError("overlap ratio must be positive, got " + fmt_g(overlap_ratio));
  }
  if (!(depth >= 0.0) || !std::isfinite(depth)) {
    throw DomainError("depth must be a non-negative real");
  }
  const double ratio = depth / d_gsee.value;
  if (!(ratio <= negligibility)) {
    throw RegimeError("small-depth regime does not apply: GSP/GSEE depth ratio " +
                          fmt_g(ratio) + " exceeds " + fmt_g(negligibility),
                      ratio);
  }
  Verdict v;
  v.regime = Regime::simplified;
  v.lhs = 1.0;
  v.rhs = std::pow(overlap_ratio, model.exponent_sum());
  v.margin = v.rhs - v.lhs;
  v.accepted = v.lhs < v.rhs;
  v.detail["depth_ratio"] = ratio;
  v.detail["gsee_depth"] = d_gsee.value;
  v.detail["gsp_depth"] = depth;
  v.detail["overlap_ratio"] = overlap_ratio;
  if (model.exponent_sum() == 0.0) v.warnings.emplace_back(kZeroExponentWarning);
  return v;
}

DepthBound max_depth(const GseeModel& model, double gamma, const Reference& ref,
                     const Accuracy& acc, double p_succ) {
  validate(ref);
  return bound_core(model, gamma, ref, gsee_depth(model, acc, gamma), p_succ);
}

DepthBound max_depth(const GseeModel& model, double gamma, const Reference& ref,
                     GseeDepth d_gsee, double p_succ) {
  validate(model);
  validate(ref);
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in (0, 1], got " + fmt_g(gamma));
  }
  require_positive_depth(d_gsee);
  return bound_core(model, gamma, ref, d_gsee.value, p_succ);
}

DepthBound max_depth_strict(double gamma, double gamma0, double d_gsee) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in (0, 1], got " + fmt_g(gamma));
  }
  if (!(gamma0 > 0.0 && gamma0 <= 1.0)) {
    throw DomainError("gamma0 must lie in (0, 1], got " + fmt_g(gamma0));
  }
  if (!(d_gsee >= 0.0) || !std::isfinite(d_gsee)) {
    throw DomainError("GSEE depth must be non-negative, got " + fmt_g(d_gsee));
  }
  DepthBound b;
  if (gamma < gamma0) {
    b.warnings.emplace_back("gamma < gamma0: no positive depth is acceptable");
    return b;
  }
  b.value = (gamma - gamma0) / gamma0 * d_gsee;
  return b;
}

double booster_depth_model(const BoosterGspModel& booster) {
  if (!(booster.delta > 0.0) || !std::isfinite(booster.delta)) {
    throw DomainError("spectral gap bound delta must be positive");
  }
  if (!(booster.gamma0 > 0.0 && booster.gamma0 <= 1.0)) {
    throw DomainError("gamma0 must lie in (0, 1]");
  }
  return 1.0 / (booster.delta * booster.gamma0);
}

StrictnessReport strictness_order(const GseeModel& model_a, const GseeModel& model_b,
                                  const GspCandidate& cand, const Reference& ref,
                                  const Accuracy& acc) {
  const Verdict va = verdict_with_reps(model_a, cand, ref, acc);
  const Verdict vb = verdict_with_reps(model_b, cand, ref, acc);

  StrictnessReport r;
  r.a = {model_a.name, va.lhs, va.rhs, va.accepted};
  r.b = {model_b.name, vb.lhs, vb.rhs, vb.accepted};
  const double sa = va.lhs / va.rhs;
  const double sb = vb.lhs / vb.rhs;
  if (sa > sb) {
    r.stricter = 0;
    r.implication_holds = !(va.accepted && !vb.accepted);
  } else if (sb > sa) {
    r.stricter = 1;
    r.implication_holds = !(vb.accepted && !va.accepted);
  } else {
    r.stricter = -1;
    r.implication_holds = va.accepted == vb.accepted;
  }
  return r;
}

}  // namespace gspgate
