#include "gspgate/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>

#include "gspgate/errors.hpp"
#include "gspgate/report.hpp"

namespace gspgate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> optional_number(const std::string& cell, const std::string& column) {
  if (cell.empty()) return std::nullopt;
  std::string_view s = cell;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw DomainError("column '" + column + "': invalid number '" + cell + "'");
  }
  return v;
}

double required_number(const std::string& cell, const std::string& column) {
  auto v = optional_number(cell, column);
  if (!v) throw DomainError("column '" + column + "' is required");
  return *v;
}

struct TextLine {
  std::size_t number;
  std::string text;
};

std::vector<TextLine> split_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    out.push_back({number, std::string(text.substr(pos, end - pos))});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool is_skippable(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

// Column cells addressed by header name; absent columns read as blank.
class Record {
 public:
  Record(const std::map<std::string, std::size_t>& columns, std::vector<std::string> cells)
      : columns_(columns), cells_(std::move(cells)) {}

  std::string get(const std::string& column) const {
    auto it = columns_.find(column);
    if (it == columns_.end() || it->second >= cells_.size()) return {};
    return trim(cells_[it->second]);
  }

 private:
  const std::map<std::string, std::size_t>& columns_;
  std::vector<std::string> cells_;
};

using Fields = std::map<std::string, std::string>;

// Builds a scenario from named string fields; shared by CSV rows and sweep
// metadata blocks.
Scenario scenario_from_fields(const Fields& f, const std::string& fallback_name) {
  auto get = [&f](const char* key) {
    auto it = f.find(key);
    return it == f.end() ? std::string() : it->second;
  };

  Scenario s;
  s.name = get("name").empty() ? fallback_name : get("name");
  const std::string unit_text = get("unit");
  const DepthUnit unit = unit_text.empty() ? DepthUnit::circuit_layers() : DepthUnit::parse(unit_text);

  const std::string gsee = get("gsee");
  const auto alpha = optional_number(get("alpha"), "alpha");
  const auto beta = optional_number(get("beta"), "beta");
  if (!gsee.empty()) {
    auto model = find_gsee(gsee, unit);
    if (!model) throw DomainError("unknown GSEE model '" + gsee + "'");
    if ((alpha && *alpha != model->alpha) || (beta && *beta != model->beta)) {
      throw DomainError("alpha/beta contradict catalog model '" + gsee + "'");
    }
    s.gsee = *model;
  } else {
    if (!alpha || !beta) throw DomainError("alpha and beta (or a gsee catalog name) are required");
    s.gsee = GseeModel{"custom", *alpha, *beta, unit, 1.0};
  }

  s.candidate.name = s.name;
  s.candidate.depth_unit = unit;
  s.candidate.gamma = required_number(get("gamma"), "gamma");
  s.candidate.depth = required_number(get("depth"), "depth");
  s.candidate.p_succ = optional_number(get("p_succ"), "p_succ").value_or(1.0);
  s.reference.gamma0 = required_number(get("gamma0"), "gamma0");
  if (auto eps = optional_number(get("epsilon"), "epsilon")) s.accuracy = Accuracy{*eps};
  s.d_gsee_override = optional_number(get("d_gsee"), "d_gsee");
  return s;
}

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& w : from) {
    if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
  }
}

}  // namespace

void validate(const Scenario& s) {
  validate(s.gsee);
  validate(s.candidate);
  validate(s.reference);
  require_same_unit(s.gsee, s.candidate);
  if (s.accuracy) validate(*s.accuracy);
  if (s.d_gsee_override && !(*s.d_gsee_override > 0.0)) {
    throw DomainError("d_gsee must be positive");
  }
  if (!s.accuracy && !s.d_gsee_override) {
    throw DomainError("either epsilon or d_gsee is required");
  }
}

ReportRow evaluate(const Scenario& s, std::string value) {
  validate(s);
  Verdict v;
  DepthBound bound;
  if (s.d_gsee_override) {
    const GseeDepth d{*s.d_gsee_override};
    v = verdict_with_reps(s.gsee, s.candidate, s.reference, d);
    bound = max_depth(s.gsee, s.candidate.gamma, s.reference, d, s.candidate.p_succ);
  } else {
    v = verdict_with_reps(s.gsee, s.candidate, s.reference, *s.accuracy);
    bound = max_depth(s.gsee, s.candidate.gamma, s.reference, *s.accuracy, s.candidate.p_succ);
  }
  ReportRow row;
  row.scenario = s.name;
  row.value = std::move(value);
  row.lhs = v.lhs;
  row.rhs = v.rhs;
  row.margin = v.margin;
  row.accepted = v.accepted;
  row.max_depth = bound.value;
  row.runtime = v.detail.at("runtime");
  row.runtime_ref = v.detail.at("runtime_ref");
  row.warnings = v.warnings;
  append_unique(row.warnings, bound.warnings);
  return row;
}

ScenarioTable parse_scenario_table(std::string_view csv) {
  static const char* kRequired[] = {"name", "alpha", "beta", "epsilon", "gamma",
                                    "gamma0", "depth", "p_succ", "unit", "d_gsee"};
  ScenarioTable table;
  const auto lines = split_lines(csv);
  std::map<std::string, std::size_t> columns;
  bool have_header = false;
  for (const auto& line : lines) {
    if (is_skippable(line.text)) continue;
    const auto cells = split_csv_line(line.text);
    if (!have_header) {
      for (std::size_t i = 0; i < cells.size(); ++i) columns[trim(cells[i])] = i;
      for (const char* col : kRequired) {
        if (!columns.count(col)) {
          throw ParseError(std::string("scenario table header is missing column '") + col + "'",
                           line.number);
        }
      }
      have_header = true;
      continue;
    }
    try {
      const Record rec(columns, cells);
      Fields fields;
      for (const auto& [col, _] : columns) fields[col] = rec.get(col);
      Scenario s = scenario_from_fields(fields, "row" + std::to_string(line.number));
      validate(s);
      table.entries.push_back({line.number, std::move(s)});
    } catch (const Error& e) {
      table.errors.push_back({line.number, e.what()});
    }
  }
  if (!have_header) throw ParseError("scenario table has no header", 0);
  return table;
}

Report run_scenarios(const ScenarioTable& table) {
  Report report;
  report.errors = table.errors;
  for (const auto& entry : table.entries) {
    try {
      report.rows.push_back(evaluate(entry.scenario));
    } catch (const Error& e) {
      report.errors.push_back({entry.row, e.what()});
    }
  }
  std::sort(report.errors.begin(), report.errors.end(),
            [](const RowError& a, const RowError& b) { return a.row < b.row; });
  return report;
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::gamma0: return "gamma0";
    case SweepVariable::gamma: return "gamma";
    case SweepVariable::depth: return "depth";
    case SweepVariable::epsilon: return "epsilon";
    case SweepVariable::p_succ: return "p_succ";
    case SweepVariable::bond_label: return "bond-label";
  }
  return "unknown";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view text) {
  for (auto v : {SweepVariable::gamma0, SweepVariable::gamma, SweepVariable::depth,
                 SweepVariable::epsilon, SweepVariable::p_succ, SweepVariable::bond_label}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

Report sweep(const SweepSpec& spec) {
  Report report;
  if (spec.variable == SweepVariable::bond_label) {
    for (const auto& row : spec.labeled) {
      try {
        if (row.gamma && row.gamma0) {
          Scenario s = spec.base;
          s.candidate.gamma = *row.gamma;
          s.reference.gamma0 = *row.gamma0;
          report.rows.push_back(evaluate(s, row.label));
          continue;
        }
        if (!row.ratio) throw DomainError("row needs gamma and gamma0, or ratio");
        const Scenario& s = spec.base;
        validate(s.gsee);
        if (!(s.candidate.p_succ > 0.0 && s.candidate.p_succ <= 1.0)) {
          throw DomainError("p_succ must lie in (0, 1]");
        }
        // γ is unknown; γ = 1 gives the smallest GSEE depth 1/ε.
        const GseeDepth d = s.d_gsee_override ? GseeDepth{*s.d_gsee_override}
                            : s.accuracy     ? GseeDepth{1.0 / s.accuracy->epsilon}
                                             : throw DomainError("either epsilon or d_gsee is required");
        const Verdict v = verdict_from_ratio(s.gsee, *row.ratio, s.candidate.depth, d,
                                             spec.negligibility);
        ReportRow out;
        out.scenario = s.name;
        out.value = row.label;
        out.lhs = v.lhs;
        out.rhs = v.rhs;
        out.margin = v.margin;
        out.accepted = v.accepted;
        out.max_depth = *row.ratio > 1.0 && s.gsee.exponent_sum() > 0.0
                            ? s.candidate.p_succ * d.value *
                                  (std::pow(*row.ratio, s.gsee.exponent_sum()) - 1.0)
                            : 0.0;
        out.runtime = kNaN;
        out.runtime_ref = kNaN;
        out.warnings = v.warnings;
        out.warnings.emplace_back("overlap ratio only: small-depth criterion; max_depth is the gamma=1 lower bound");
        report.rows.push_back(std::move(out));
      } catch (const Error& e) {
        report.errors.push_back({row.row, e.what()});
      }
    }
    return report;
  }

  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double x = spec.grid[i];
    const std::size_t line = i < spec.grid_rows.size() ? spec.grid_rows[i] : i + 1;
    try {
      Scenario s = spec.base;
      switch (spec.variable) {
        case SweepVariable::gamma0: s.reference.gamma0 = x; break;
        case SweepVariable::gamma: s.candidate.gamma = x; break;
        case SweepVariable::depth: s.candidate.depth = x; break;
        case SweepVariable::epsilon:
          s.accuracy = Accuracy{x};
          s.d_gsee_override.reset();
          break;
        case SweepVariable::p_succ: s.candidate.p_succ = x; break;
        case SweepVariable::bond_label: break;
      }
      report.rows.push_back(evaluate(s, format_number(x)));
    } catch (const Error& e) {
      report.errors.push_back({line, e.what()});
    }
  }
  return report;
}

Curve max_depth_curve(double gamma, double d_gsee, const std::vector<double>& gamma0_grid) {
  Curve curve;
  for (std::size_t i = 0; i < gamma0_grid.size(); ++i) {
    const double g0 = gamma0_grid[i];
    try {
      if (!(g0 > 0.0 && g0 <= gamma)) {
        throw DomainError("gamma0 = " + format_number(g0) + " outside (0, gamma]");
      }
      DepthBound b = max_depth_strict(gamma, g0, d_gsee);
      curve.points.push_back({g0, b.value, std::move(b.warnings)});
    } catch (const Error& e) {
      curve.errors.push_back({i + 1, e.what()});
    }
  }
  return curve;
}

SweepSpec parse_sweep_table(std::string_view text) {
  const auto lines = split_lines(text);
  Fields meta;
  std::vector<std::string> header;
  std::size_t header_line = 0;
  SweepSpec spec;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> data;

  for (const auto& line : lines) {
    const std::string t = trim(line.text);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string body = trim(std::string_view(t).substr(1));
      const auto eq = body.find('=');
      if (eq != std::string::npos && header.empty()) {
        meta[trim(std::string_view(body).substr(0, eq))] = trim(std::string_view(body).substr(eq + 1));
      }
      continue;
    }
    auto cells = split_csv_line(t);
    for (auto& c : cells) c = trim(c);
    if (header.empty()) {
      header = std::move(cells);
      header_line = line.number;
    } else {
      data.emplace_back(line.number, std::move(cells));
    }
  }
  if (header.empty()) throw ParseError("sweep table has no column header", 0);

  auto column = [&header](const char* name) -> std::optional<std::size_t> {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  auto cell = [](const std::vector<std::string>& cells, std::optional<std::size_t> idx) {
    return idx && *idx < cells.size() ? cells[*idx] : std::string();
  };

  const std::string mode = meta.count("mode") ? meta["mode"] : "verdict";
  if (mode != "verdict" && mode != "curve") {
    throw ParseError("unknown sweep mode '" + mode + "'", 0);
  }
  spec.curve = mode == "curve";
  if (meta.count("negligibility")) {
    spec.negligibility = required_number(meta["negligibility"], "negligibility");
  }

  const auto label_col = column("label");
  const auto value_col = column("value");
  if (label_col) {
    spec.variable = SweepVariable::bond_label;
  } else if (value_col) {
    const std::string var = meta.count("variable") ? meta["variable"] : "";
    auto parsed = parse_sweep_variable(var);
    if (!parsed || *parsed == SweepVariable::bond_label) {
      throw ParseError("a 'value' column needs '# variable=' set to gamma0, gamma, depth, epsilon or p_succ",
                       header_line);
    }
    spec.variable = *parsed;
  } else {
    throw ParseError("sweep header must contain 'label' or 'value'", header_line);
  }
  if (spec.curve && spec.variable != SweepVariable::gamma0) {
    throw ParseError("curve mode sweeps gamma0 only", header_line);
  }

  // Placeholders let labeled rows supply their own overlaps.
  Fields base_fields = meta;
  if (!base_fields.count("gamma") || base_fields["gamma"].empty()) base_fields["gamma"] = "1";
  if (!base_fields.count("gamma0") || base_fields["gamma0"].empty()) base_fields["gamma0"] = "1";
  if (!base_fields.count("depth") || base_fields["depth"].empty()) base_fields["depth"] = "0";
  try {
    spec.base = scenario_from_fields(base_fields, "sweep");
  } catch (const Error& e) {
    throw ParseError(std::string("sweep metadata: ") + e.what(), 0);
  }

  for (const auto& [number, cells] : data) {
    if (spec.variable == SweepVariable::bond_label) {
      LabeledOverlap row;
      row.row = number;
      row.label = cell(cells, label_col);
      try {
        row.gamma = optional_number(cell(cells, column("gamma")), "gamma");
        row.gamma0 = optional_number(cell(cells, column("gamma0")), "gamma0");
        row.ratio = optional_number(cell(cells, column("ratio")), "ratio");
      } catch (const Error& e) {
        throw ParseError(e.what(), number);
      }
      spec.labeled.push_back(std::move(row));
    } else {
      try {
        spec.grid.push_back(required_number(cell(cells, value_col), "value"));
      } catch (const Error& e) {
        throw ParseError(e.what(), number);
      }
      spec.grid_rows.push_back(number);
    }
  }
  return spec;
}

bool looks_like_scenario_table(std::string_view text) {
  for (const auto& line : split_lines(text)) {
    if (is_skippable(line.text)) continue;
    const auto cells = split_csv_line(line.text);
    return !cells.empty() && trim(cells.front()) == "name";
  }
  return false;
}

}  // namespace gspgate
