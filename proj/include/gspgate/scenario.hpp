#pragma once

// Batch evaluation of acceptability scenarios: scenario tables, sweeps and
// maximum-depth curves.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gspgate/criteria.hpp"
#include "gspgate/runtime_model.hpp"

namespace gspgate {

struct Scenario {
  std::string name;
  GseeModel gsee;
  GspCandidate candidate;
  Reference reference;
  std::optional<Accuracy> accuracy;
  std::optional<double> d_gsee_override;  // per-run GSEE depth at gamma
};

/// Throws DomainError/UnitMismatchError. Needs epsilon or a GSEE depth.
void validate(const Scenario& s);

struct ReportRow {
  std::string scenario;
  std::string value;  // swept variable or label; empty for plain scenarios
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool accepted = false;
  double max_depth = 0.0;
  double runtime = 0.0;      // NaN when not determined by the inputs
  double runtime_ref = 0.0;  // NaN when not determined by the inputs
  std::vector<std::string> warnings;
};

struct RowError {
  std::size_t row = 0;  // 1-based line in the input table
  std::string message;
};

struct Report {
  std::vector<ReportRow> rows;
  std::vector<RowError> errors;
};

/// Evaluates one scenario with the repetition-aware criterion (identical to
/// the general criterion when p_succ = 1).
ReportRow evaluate(const Scenario& s, std::string value = {});

// --- scenario tables -----------------------------------------------------

struct ScenarioTable {
  struct Entry {
    std::size_t row;
    Scenario scenario;
  };
  std::vector<Entry> entries;
  std::vector<RowError> errors;  // rows that failed to parse or validate
};

/// CSV with header; required columns name, alpha, beta, epsilon, gamma,
/// gamma0, depth, p_succ, unit, d_gsee. An optional `gsee` column names a
/// catalog model and replaces blank alpha/beta cells. Blank p_succ means 1,
/// blank unit means circuit-layers, blank d_gsee means 1/(eps gamma^beta).
ScenarioTable parse_scenario_table(std::string_view csv);

/// One row per valid scenario, in input order; bad rows land in `errors`.
Report run_scenarios(const ScenarioTable& table);

// --- sweeps --------------------------------------------------------------

enum class SweepVariable { gamma0, gamma, depth, epsilon, p_succ, bond_label };

std::string to_string(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view text);

/// A labeled data row. Either both overlaps or only their ratio are known.
struct LabeledOverlap {
  std::string label;
  std::optional<double> gamma;
  std::optional<double> gamma0;
  std::optional<double> ratio;
  std::size_t row = 0;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::bond_label;
  std::vector<double> grid;             // numeric variables
  std::vector<std::size_t> grid_rows;   // source line of each grid value
  std::vector<LabeledOverlap> labeled;  // bond_label
  Scenario base;
  bool curve = false;  // emit (gamma0, d_max) instead of verdict rows
  double negligibility = kDefaultNegligibility;
};

/// Rows in grid order. Labeled rows with both overlaps are evaluated like
/// scenarios. Ratio-only rows use the small-depth criterion with the γ ≤ 1
/// guard D·ε ≤ negligibility; their max_depth is the γ = 1 lower bound and
/// runtimes are left undetermined.
Report sweep(const SweepSpec& spec);

struct CurvePoint {
  double gamma0 = 0.0;
  double d_max = 0.0;
  std::vector<std::string> warnings;
};

struct Curve {
  std::vector<CurvePoint> points;
  std::vector<RowError> errors;  // row = 1-based grid position
};

/// d_max = ((γ - γ₀)/γ₀)·D_GSEE per grid point; points outside (0, γ] are
/// reported and skipped.
Curve max_depth_curve(double gamma, double d_gsee, const std::vector<double>& gamma0_grid);

/// Sweep table: '# key=value' metadata lines for the base scenario
/// (name, gsee | alpha + beta, epsilon, gamma, gamma0, depth, p_succ, unit,
/// d_gsee, variable, mode=verdict|curve, negligibility), then a CSV header
/// of either `label,gamma,gamma0`, `label,ratio` or `value`.
SweepSpec parse_sweep_table(std::string_view text);

/// True when the CSV header (first non-comment line) starts with `name`.
bool looks_like_scenario_table(std::string_view text);

}  // namespace gspgate
