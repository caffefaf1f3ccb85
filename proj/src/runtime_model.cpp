#include "gspgate/runtime_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "gspgate/errors.hpp"

namespace gspgate {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void require_overlap(double gamma, const char* what) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in (0, 1], got " +
                      std::to_string(gamma));
  }
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive, got " + std::to_string(epsilon));
  }
}

}  // namespace

DepthUnit DepthUnit::parse(std::string_view text) {
  if (text == "circuit-layers" || text == "controlled-evolutions" || text == "t-count") {
    return DepthUnit(std::string(text));
  }
  constexpr std::string_view custom = "custom:";
  if (text.size() > custom.size() && text.substr(0, custom.size()) == custom) {
    return DepthUnit(std::string(text));
  }
  throw DomainError("unknown depth unit '" + std::string(text) +
                    "' (expected circuit-layers, controlled-evolutions, t-count or custom:<tag>)");
}

void validate(const GseeModel& model) {
  if (!(model.alpha >= 0.0) || !std::isfinite(model.alpha)) {
    throw DomainError("alpha must be a non-negative real");
  }
  if (!(model.beta >= 0.0) || !std::isfinite(model.beta)) {
    throw DomainError("beta must be a non-negative real");
  }
  if (!(model.prefactor > 0.0) || !std::isfinite(model.prefactor)) {
    throw DomainError("prefactor must be positive");
  }
}

void validate(const GspCandidate& cand) {
  require_overlap(cand.gamma, "gamma");
  if (!(cand.p_succ > 0.0 && cand.p_succ <= 1.0)) {
    throw DomainError("p_succ must lie in (0, 1], got " + std::to_string(cand.p_succ));
  }
  if (!(cand.depth >= 0.0) || !std::isfinite(cand.depth)) {
    throw DomainError("depth must be a non-negative real");
  }
}

void validate(const Reference& ref) { require_overlap(ref.gamma0, "gamma0"); }

void validate(const Accuracy& acc) { require_epsilon(acc.epsilon); }

const std::vector<GseeModel>& gsee_catalog() {
  static const std::vector<GseeModel> catalog = {
      {"qpe", 2.0, 2.0, DepthUnit::circuit_layers(), 1.0},
      {"lt20", 0.0, 1.0, DepthUnit::circuit_layers(), 1.0},
  };
  return catalog;
}

std::optional<GseeModel> find_gsee(std::string_view name, DepthUnit unit) {
  const std::string key = to_lower(name);
  for (const auto& m : gsee_catalog()) {
    if (m.name == key) {
      GseeModel out = m;
      out.depth_unit = std::move(unit);
      return out;
    }
  }
  return std::nullopt;
}

void require_same_unit(const GseeModel& model, const GspCandidate& cand) {
  if (!(model.depth_unit == cand.depth_unit)) {
    throw UnitMismatchError("depth units differ: GSEE model '" + model.name + "' uses " +
                            model.depth_unit.str() + ", candidate '" + cand.name +
                            "' uses " + cand.depth_unit.str());
  }
}

double gsee_depth(const GseeModel& model, const Accuracy& acc, double gamma) {
  validate(model);
  require_overlap(gamma, "gamma");
  require_epsilon(acc.epsilon);
  return 1.0 / (acc.epsilon * std::pow(gamma, model.beta));
}

double repetitions(const GseeModel& model, double gamma) {
  validate(model);
  require_overlap(gamma, "gamma");
  return 1.0 / std::pow(gamma, model.alpha);
}

double runtime_total(const GseeModel& model, const GspCandidate& cand,
                     const Accuracy& acc) {
  require_same_unit(model, cand);
  validate(cand);
  return model.prefactor * repetitions(model, cand.gamma) *
         (cand.depth + gsee_depth(model, acc, cand.gamma));
}

double runtime_reference(const GseeModel& model, const Reference& ref,
                         const Accuracy& acc) {
  validate(ref);
  return model.prefactor * repetitions(model, ref.gamma0) *
         (Reference::depth + gsee_depth(model, acc, ref.gamma0));
}

double runtime_with_reps(const GseeModel& model, const GspCandidate& cand,
                         const Accuracy& acc) {
  require_same_unit(model, cand);
  validate(cand);
  return model.prefactor * repetitions(model, cand.gamma) *
         (cand.depth / cand.p_succ + gsee_depth(model, acc, cand.gamma));
}

double runtime_with_reps(const GseeModel& model, const GspCandidate& cand,
                         GseeDepth d_gsee) {
  require_same_unit(model, cand);
  validate(cand);
  if (!(d_gsee.value > 0.0) || !std::isfinite(d_gsee.value)) {
    throw DomainError("GSEE depth must be positive");
  }
  return model.prefactor * repetitions(model, cand.gamma) *
         (cand.depth / cand.p_succ + d_gsee.value);
}

double runtime_reference(const GseeModel& model, const GspCandidate& cand,
                         const Reference& ref, GseeDepth d_gsee) {
  validate(cand);
  validate(ref);
  if (!(d_gsee.value > 0.0) || !std::isfinite(d_gsee.value)) {
    throw DomainError("GSEE depth must be positive");
  }
  const double reference_depth = d_gsee.value * std::pow(cand.gamma / ref.gamma0, model.beta);
  return model.prefactor * repetitions(model, ref.gamma0) * reference_depth;
}

}  // namespace gspgate
