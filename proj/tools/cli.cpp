#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gspgate/criteria.hpp"
#include "gspgate/errors.hpp"
#include "gspgate/report.hpp"
#include "gspgate/runtime_model.hpp"
#include "gspgate/scenario.hpp"
#include "gspgate/spectral.hpp"
#include "gspgate/text_formats.hpp"

namespace gspgate::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest representation that parses back to the same double.
std::string exact_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : format_number(v);
}

struct Field {
  std::string key;
  ordered_json value;
  bool exact = false;  // echo of an input: print round-trippable
};

using Record = std::vector<Field>;

std::string field_text(const Field& f) {
  if (f.value.is_boolean()) return f.value.get<bool>() ? "true" : "false";
  if (f.value.is_number()) {
    const double v = f.value.get<double>();
    if (std::isnan(v)) return {};
    return f.exact ? exact_number(v) : format_number(v);
  }
  if (f.value.is_null()) return {};
  return f.value.get<std::string>();
}

ordered_json to_json(const Record& r) {
  ordered_json j = ordered_json::object();
  for (const auto& f : r) {
    if (f.value.is_number() && std::isnan(f.value.get<double>())) {
      j[f.key] = nullptr;
    } else {
      j[f.key] = f.value;
    }
  }
  return j;
}

void emit_records(const std::vector<Record>& records, const std::string& format, std::ostream& out) {
  if (format == "json") {
    if (records.size() == 1) {
      out << to_json(records.front()).dump(2) << '\n';
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    }
    return;
  }
  if (format == "csv") {
    if (records.empty()) return;
    for (std::size_t i = 0; i < records.front().size(); ++i) {
      out << (i ? "," : "") << records.front()[i].key;
    }
    out << '\n';
    for (const auto& r : records) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(field_text(r[i]));
      out << '\n';
    }
    return;
  }
  std::size_t width = 0;
  for (const auto& r : records) {
    for (const auto& f : r) width = std::max(width, f.key.size());
  }
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (k) out << '\n';
    for (const auto& f : records[k]) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << f.key << field_text(f) << '\n';
    }
  }
}

// --- shared flag groups ----------------------------------------------------

struct ModelFlags {
  std::string gsee;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string unit = "circuit-layers";
  CLI::Option* gsee_opt = nullptr;
};

void add_model_flags(CLI::App* app, ModelFlags& m) {
  m.gsee_opt = app->add_option("--gsee", m.gsee, "Catalog GSEE algorithm (qpe, lt20)");
  auto* a = app->add_option("--alpha", m.alpha, "Repetition exponent alpha");
  auto* b = app->add_option("--beta", m.beta, "Depth exponent beta");
  m.gsee_opt->excludes(a)->excludes(b);
  app->add_option("--unit", m.unit, "Depth unit (circuit-layers, controlled-evolutions, t-count, custom:<tag>)");
}

DepthUnit resolve_unit(const std::string& text) {
  try {
    return DepthUnit::parse(text);
  } catch (const DomainError& e) {
    throw InputError(std::string("--unit: ") + e.what());
  }
}

GseeModel resolve_model(const ModelFlags& m) {
  const DepthUnit unit = resolve_unit(m.unit);
  if (!m.gsee.empty()) {
    auto model = find_gsee(m.gsee, unit);
    if (!model) throw InputError("--gsee: unknown model '" + m.gsee + "' (see 'catalog')");
    return *model;
  }
  if (!m.alpha || !m.beta) throw InputError("--alpha and --beta (or --gsee) are required");
  GseeModel model{"custom", *m.alpha, *m.beta, unit, 1.0};
  try {
    validate(model);
  } catch (const DomainError& e) {
    throw InputError(std::string("--alpha/--beta: ") + e.what());
  }
  return model;
}

struct CandidateFlags {
  double gamma = 1.0;
  double gamma0 = 1.0;
  double depth = 0.0;
  double p_succ = 1.0;
  std::optional<double> epsilon;
  std::optional<double> d_gsee;
};

void check_candidate(const CandidateFlags& c) {
  if (!(c.gamma > 0.0 && c.gamma <= 1.0)) throw InputError("--gamma must lie in (0, 1]");
  if (!(c.gamma0 > 0.0 && c.gamma0 <= 1.0)) throw InputError("--gamma0 must lie in (0, 1]");
  if (!(c.depth >= 0.0)) throw InputError("--depth must be non-negative");
  if (!(c.p_succ > 0.0 && c.p_succ <= 1.0)) throw InputError("--p-succ must lie in (0, 1]");
  if (c.epsilon && !(*c.epsilon > 0.0)) throw InputError("--epsilon must be positive");
  if (c.d_gsee && !(*c.d_gsee > 0.0)) throw InputError("--d-gsee must be positive");
}

std::string data_dir() {
  if (const char* env = std::getenv("GSPGATE_DATA_DIR"); env && *env) return env;
  return GSPGATE_DATA_DIR;
}

fs::path fixture_path(const std::string& name) {
  fs::path p = fs::path(data_dir()) / "fixtures" / (name + ".csv");
  if (!fs::exists(p)) throw InputError("--fixture: no fixture named '" + name + "' in " + p.parent_path().string());
  return p;
}

// Writes to --output when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("--output: cannot open " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

// --- subcommands -----------------------------------------------------------

struct VerdictCmd {
  ModelFlags model;
  CandidateFlags cand;
  bool simplified = false;
  double negligibility = kDefaultNegligibility;
  std::string format = "table";
};

int do_verdict(const VerdictCmd& c, std::ostream& out, std::ostream& err) {
  check_candidate(c.cand);
  const GseeModel model = resolve_model(c.model);
  if (!c.cand.epsilon && !c.cand.d_gsee) throw InputError("--epsilon or --d-gsee is required");
  GspCandidate cand{"candidate", c.cand.depth, c.cand.gamma, c.cand.p_succ, model.depth_unit};
  const Reference ref{c.cand.gamma0};

  Verdict v;
  if (c.simplified) {
    v = c.cand.d_gsee ? verdict_simplified(model, cand, ref, GseeDepth{*c.cand.d_gsee}, c.negligibility)
                      : verdict_simplified(model, cand, ref, Accuracy{*c.cand.epsilon}, c.negligibility);
  } else {
    v = c.cand.d_gsee ? verdict_with_reps(model, cand, ref, GseeDepth{*c.cand.d_gsee})
                      : verdict_with_reps(model, cand, ref, Accuracy{*c.cand.epsilon});
  }
  auto detail = [&v](const char* key) {
    auto it = v.detail.find(key);
    return it == v.detail.end() ? std::nan("") : it->second;
  };

  Record r = {
      {"model", model.name},
      {"alpha", model.alpha, true},
      {"beta", model.beta, true},
      {"epsilon", c.cand.epsilon ? *c.cand.epsilon : std::nan(""), true},
      {"d_gsee", c.cand.d_gsee ? *c.cand.d_gsee : std::nan(""), true},
      {"gamma", c.cand.gamma, true},
      {"gamma0", c.cand.gamma0, true},
      {"depth", c.cand.depth, true},
      {"p_succ", c.cand.p_succ, true},
      {"unit", model.depth_unit.str()},
      {"gsee_depth", detail("gsee_depth")},
      {"total_depth", detail("total_depth")},
      {"lhs", v.lhs},
      {"rhs", v.rhs},
      {"margin", v.margin},
      {"accepted", v.accepted},
      {"regime", to_string(v.regime)},
      {"runtime", detail("runtime")},
      {"runtime_ref", detail("runtime_ref")},
      {"warnings", join_warnings(v.warnings)},
  };
  emit_records({r}, c.format, out);
  if (c.format == "table") {
    if (v.regime == Regime::simplified) {
      out << "criterion: 1 < (gamma/gamma0)^(alpha+beta) = " << format_number(v.rhs) << '\n';
    } else {
      out << "criterion: total depth / GSEE depth = " << format_number(v.lhs)
          << (v.accepted ? " < " : " >= ") << "N_reps(HF)/N_reps(GSP) = (gamma/gamma0)^(alpha+beta) = "
          << format_number(v.rhs) << '\n';
    }
    out << (v.accepted ? "ACCEPT" : "REJECT") << '\n';
  }
  print_warnings(v.warnings, err);
  return v.accepted ? kExitOk : kExitRejected;
}

struct MaxDepthCmd {
  ModelFlags model;
  double gamma = 1.0;
  double gamma0 = 1.0;
  std::optional<double> d_gsee;
  std::optional<double> epsilon;
  double p_succ = 1.0;
  std::string format = "table";
};

int do_max_depth(const MaxDepthCmd& c, std::ostream& out, std::ostream& err) {
  CandidateFlags check{c.gamma, c.gamma0, 0.0, c.p_succ, c.epsilon, c.d_gsee};
  check_candidate(check);
  const bool has_model = !c.model.gsee.empty() || c.model.alpha || c.model.beta;
  DepthBound bound;
  std::string model_name = "strict(alpha+beta=1)";
  double d_gsee = 0.0;
  if (c.d_gsee && !has_model) {
    d_gsee = *c.d_gsee;
    bound = max_depth_strict(c.gamma, c.gamma0, d_gsee);
    bound.value *= c.p_succ;
  } else {
    if (!c.d_gsee && !c.epsilon) throw InputError("--d-gsee or --epsilon is required");
    const GseeModel model = resolve_model(c.model);
    model_name = model.name;
    const Reference ref{c.gamma0};
    if (c.d_gsee) {
      d_gsee = *c.d_gsee;
      bound = max_depth(model, c.gamma, ref, GseeDepth{d_gsee}, c.p_succ);
    } else {
      d_gsee = gsee_depth(model, Accuracy{*c.epsilon}, c.gamma);
      bound = max_depth(model, c.gamma, ref, Accuracy{*c.epsilon}, c.p_succ);
    }
  }
  const double gain = (c.gamma - c.gamma0) / c.gamma0;
  Record r = {
      {"model", model_name},
      {"gamma", c.gamma, true},
      {"gamma0", c.gamma0, true},
      {"p_succ", c.p_succ, true},
      {"gsee_depth", d_gsee},
      {"performance_gain_over_hf", gain},
      {"max_depth", bound.value},
      {"warnings", join_warnings(bound.warnings)},
  };
  emit_records({r}, c.format, out);
  if (c.format == "table") {
    out << "GSP depth < performance gain / HF performance x GSEE depth = (" << format_number(c.gamma)
        << " - " << format_number(c.gamma0) << ")/" << format_number(c.gamma0) << " x "
        << format_number(d_gsee);
    if (model_name != "strict(alpha+beta=1)") out << " (alpha+beta=1 form; max_depth above uses the model)";
    out << '\n';
  }
  print_warnings(bound.warnings, err);
  return kExitOk;
}

struct RuntimeCmd {
  ModelFlags model;
  CandidateFlags cand;
  std::string format = "table";
};

int do_runtime(const RuntimeCmd& c, std::ostream& out, std::ostream&) {
  check_candidate(c.cand);
  const GseeModel model = resolve_model(c.model);
  if (!c.cand.epsilon && !c.cand.d_gsee) throw InputError("--epsilon or --d-gsee is required");
  const GspCandidate cand{"candidate", c.cand.depth, c.cand.gamma, c.cand.p_succ, model.depth_unit};
  const Reference ref{c.cand.gamma0};
  double t = 0.0, t0 = 0.0, g = 0.0;
  if (c.cand.d_gsee) {
    g = *c.cand.d_gsee;
    t = runtime_with_reps(model, cand, GseeDepth{g});
    t0 = runtime_reference(model, cand, ref, GseeDepth{g});
  } else {
    const Accuracy acc{*c.cand.epsilon};
    g = gsee_depth(model, acc, cand.gamma);
    t = runtime_with_reps(model, cand, acc);
    t0 = runtime_reference(model, ref, acc);
  }
  Record r = {
      {"model", model.name},
      {"alpha", model.alpha, true},
      {"beta", model.beta, true},
      {"gamma", cand.gamma, true},
      {"gamma0", ref.gamma0, true},
      {"depth", cand.depth, true},
      {"p_succ", cand.p_succ, true},
      {"repetitions", repetitions(model, cand.gamma)},
      {"gsee_depth", g},
      {"runtime", t},
      {"runtime_ref", t0},
  };
  emit_records({r}, c.format, out);
  return kExitOk;
}

int do_catalog(const std::string& format, std::ostream& out) {
  std::vector<Record> records;
  for (const auto& m : gsee_catalog()) {
    records.push_back({{"name", m.name}, {"alpha", m.alpha, true}, {"beta", m.beta, true}});
  }
  emit_records(records, format, out);
  if (format == "table") {
    out << "\nother exponents: alpha in {0,2,4}, beta in {0,1,2} via --alpha/--beta\n";
  }
  return kExitOk;
}

struct StateFlags {
  std::string hamiltonian;
  std::string state;
  std::optional<long long> basis_index;
  double degeneracy_tol = kDefaultDegeneracyTol;
  std::string solver = "auto";
  std::string format = "table";
};

SolverOptions solver_options(const std::string& solver) {
  SolverOptions opts;
  if (solver == "dense") opts.path = SolverPath::dense;
  else if (solver == "iterative") opts.path = SolverPath::iterative;
  return opts;
}

std::optional<StateVector> load_prepared(const StateFlags& f, Index dim, std::ostream& err) {
  if (!f.state.empty()) {
    LoadedState s = load_state_file(f.state);
    print_warnings(s.warnings, err);
    if (s.state.dim() != dim) throw InputError("--state: dimension does not match the Hamiltonian");
    return s.state;
  }
  if (f.basis_index) {
    if (*f.basis_index < 0 || *f.basis_index >= dim) throw InputError("--basis-index out of range");
    return StateVector::basis(dim, static_cast<Index>(*f.basis_index));
  }
  return std::nullopt;
}

int do_spectral(const StateFlags& f, std::ostream& out, std::ostream& err) {
  const Hamiltonian h = load_hamiltonian_file(f.hamiltonian);
  const auto prepared = load_prepared(f, h.dim(), err);
  const SpectralResult spec = ground_state(h, f.degeneracy_tol, solver_options(f.solver));
  Record r = {
      {"dim", static_cast<double>(h.dim()), true},
      {"unit", h.energy_unit()},
      {"e0", spec.e0},
      {"gap", spec.gap},
      {"degeneracy", static_cast<double>(spec.ground_subspace.cols()), true},
  };
  if (prepared) {
    const Overlap o = overlap(*prepared, spec);
    r.push_back({"gamma", o.gamma});
    r.push_back({"eta", o.eta});
  }
  emit_records({r}, f.format, out);
  return kExitOk;
}

struct BoostCmd {
  StateFlags state;
  std::string filter = "gaussian";
  std::optional<double> center;
  std::optional<double> width;
  std::optional<double> rate;
  std::optional<double> cutoff;
  std::string output;
};

int do_boost(const BoostCmd& c, std::ostream& out, std::ostream& err) {
  const Hamiltonian h = load_hamiltonian_file(c.state.hamiltonian);
  const auto prepared = load_prepared(c.state, h.dim(), err);
  if (!prepared) throw InputError("--state or --basis-index is required");
  FilterSpec f;
  if (c.filter == "gaussian") {
    if (!c.center || !c.width) throw InputError("--filter gaussian needs --center and --width");
    f = FilterSpec::gaussian(*c.center, *c.width);
  } else if (c.filter == "exponential") {
    if (!c.rate) throw InputError("--filter exponential needs --rate");
    f = FilterSpec::exponential(c.center.value_or(0.0), *c.rate);
  } else {
    if (!c.cutoff) throw InputError("--filter step needs --cutoff");
    f = FilterSpec::step(*c.cutoff);
  }
  BoostResult b = [&] {
    try {
      return boost_filter(h, *prepared, f, c.state.degeneracy_tol);
    } catch (const DomainError& e) {
      throw InputError(std::string("--filter: ") + e.what());
    }
  }();
  if (!c.output.empty()) {
    Sink sink(c.output, out);
    sink.stream() << write_state(b.boosted);
  }
  Record r = {
      {"dim", static_cast<double>(h.dim()), true},
      {"filter", to_string(f.kind)},
      {"gamma_before", b.gamma_before},
      {"gamma_after", b.gamma_after},
      {"eta_before", b.gamma_before * b.gamma_before},
      {"eta_after", b.gamma_after * b.gamma_after},
  };
  emit_records({r}, c.state.format, out);
  return kExitOk;
}

struct SweepCmd {
  std::string input;
  std::string fixture;
  std::string format = "csv";
  std::string output;
};

std::vector<Record> report_records(const std::vector<ReportRow>& rows) {
  std::vector<Record> out;
  for (const auto& r : rows) {
    out.push_back({{"scenario", r.scenario},
                   {"value", r.value},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"margin", r.margin},
                   {"accepted", r.accepted},
                   {"max_depth", r.max_depth},
                   {"runtime", r.runtime},
                   {"runtime_ref", r.runtime_ref},
                   {"warnings", join_warnings(r.warnings)}});
  }
  return out;
}

int do_sweep(const SweepCmd& c, std::ostream& out, std::ostream& err) {
  const fs::path path = c.fixture.empty() ? fs::path(c.input) : fixture_path(c.fixture);
  const std::string text = read_text_file(path);
  Sink sink(c.output, out);
  std::ostream& os = sink.stream();

  std::vector<RowError> errors;
  if (looks_like_scenario_table(text)) {
    const Report report = run_scenarios(parse_scenario_table(text));
    if (c.format == "csv") os << report_csv(report.rows);
    else emit_records(report_records(report.rows), c.format, os);
    errors = report.errors;
  } else {
    const SweepSpec spec = parse_sweep_table(text);
    if (spec.curve) {
      if (!spec.base.d_gsee_override && !spec.base.accuracy) {
        throw InputError(path.string() + ": curve needs d_gsee or epsilon metadata");
      }
      const double d_gsee = spec.base.d_gsee_override
                                ? *spec.base.d_gsee_override
                                : gsee_depth(spec.base.gsee, *spec.base.accuracy,
                                             spec.base.candidate.gamma);
      const Curve curve = max_depth_curve(spec.base.candidate.gamma, d_gsee, spec.grid);
      if (c.format == "csv") {
        os << curve_csv(curve);
      } else {
        std::vector<Record> records;
        for (const auto& p : curve.points) records.push_back({{"gamma0", p.gamma0}, {"d_max", p.d_max}});
        emit_records(records, c.format, os);
      }
      for (const auto& e : curve.errors) {
        errors.push_back({e.row <= spec.grid_rows.size() ? spec.grid_rows[e.row - 1] : e.row, e.message});
      }
    } else {
      const Report report = sweep(spec);
      if (c.format == "csv") os << report_csv(report.rows);
      else emit_records(report_records(report.rows), c.format, os);
      errors = report.errors;
    }
  }
  for (const auto& e : errors) err << path.string() << ":" << e.row << ": " << e.message << '\n';
  return errors.empty() ? kExitOk : kExitInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Acceptability criteria for ground-state preparation methods", "gspgate"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"table", "csv", "json"};

  VerdictCmd verdict;
  auto* v = app.add_subcommand("verdict", "Accept or reject a GSP candidate against the reference");
  add_model_flags(v, verdict.model);
  v->add_option("--epsilon", verdict.cand.epsilon, "Target accuracy");
  v->add_option("--d-gsee", verdict.cand.d_gsee, "GSEE depth per run at gamma (instead of 1/(eps gamma^beta))");
  v->add_option("--gamma", verdict.cand.gamma, "GSP overlap amplitude")->required();
  v->add_option("--gamma0", verdict.cand.gamma0, "Reference overlap amplitude")->required();
  v->add_option("--depth", verdict.cand.depth, "GSP depth");
  v->add_option("--p-succ", verdict.cand.p_succ, "GSP success probability");
  v->add_flag("--simplified", verdict.simplified, "Use the small-depth criterion");
  v->add_option("--negligibility", verdict.negligibility, "Small-depth threshold on GSP/GSEE depth");
  v->add_option("--format", verdict.format)->check(CLI::IsMember(formats));

  MaxDepthCmd maxd;
  auto* m = app.add_subcommand("max-depth", "Largest acceptable GSP depth");
  add_model_flags(m, maxd.model);
  m->add_option("--gamma", maxd.gamma)->required();
  m->add_option("--gamma0", maxd.gamma0)->required();
  auto* md_d = m->add_option("--d-gsee", maxd.d_gsee, "GSEE depth");
  auto* md_e = m->add_option("--epsilon", maxd.epsilon, "Target accuracy");
  md_d->excludes(md_e);
  m->add_option("--p-succ", maxd.p_succ);
  m->add_option("--format", maxd.format)->check(CLI::IsMember(formats));

  RuntimeCmd runtime;
  auto* r = app.add_subcommand("runtime", "Runtime with the candidate and with the reference");
  add_model_flags(r, runtime.model);
  r->add_option("--epsilon", runtime.cand.epsilon);
  r->add_option("--d-gsee", runtime.cand.d_gsee);
  r->add_option("--gamma", runtime.cand.gamma)->required();
  r->add_option("--gamma0", runtime.cand.gamma0)->required();
  r->add_option("--depth", runtime.cand.depth);
  r->add_option("--p-succ", runtime.cand.p_succ);
  r->add_option("--format", runtime.format)->check(CLI::IsMember(formats));

  std::string catalog_format = "table";
  auto* cat = app.add_subcommand("catalog", "List built-in GSEE algorithms");
  cat->add_option("--format", catalog_format)->check(CLI::IsMember(formats));

  StateFlags spectral;
  auto* sp = app.add_subcommand("spectral", "Ground energy, gap and overlap of a small Hamiltonian");
  sp->add_option("--hamiltonian", spectral.hamiltonian, "HAMX or PAULI file")->required();
  auto* sp_s = sp->add_option("--state", spectral.state, "STATE file");
  auto* sp_b = sp->add_option("--basis-index", spectral.basis_index, "Computational-basis reference state");
  sp_s->excludes(sp_b);
  sp->add_option("--degeneracy-tol", spectral.degeneracy_tol);
  sp->add_option("--solver", spectral.solver)->check(CLI::IsMember({"auto", "dense", "iterative"}));
  sp->add_option("--format", spectral.format)->check(CLI::IsMember(formats));

  BoostCmd boost;
  auto* bo = app.add_subcommand("boost", "Apply a monotone spectral filter to a state");
  bo->add_option("--hamiltonian", boost.state.hamiltonian)->required();
  auto* bo_s = bo->add_option("--state", boost.state.state);
  auto* bo_b = bo->add_option("--basis-index", boost.state.basis_index);
  bo_s->excludes(bo_b);
  bo->add_option("--filter", boost.filter)->check(CLI::IsMember({"gaussian", "exponential", "step"}));
  bo->add_option("--center", boost.center, "Gaussian center / exponential pivot");
  bo->add_option("--width", boost.width, "Gaussian width");
  bo->add_option("--rate", boost.rate, "Exponential rate");
  bo->add_option("--cutoff", boost.cutoff, "Step cutoff energy");
  bo->add_option("--degeneracy-tol", boost.state.degeneracy_tol);
  bo->add_option("--output", boost.output, "Write the boosted state (STATE format)");
  bo->add_option("--format", boost.state.format)->check(CLI::IsMember(formats));

  SweepCmd sweep_cmd;
  auto* sw = app.add_subcommand("sweep", "Evaluate a scenario table, sweep table or curve fixture");
  auto* sw_i = sw->add_option("--input", sweep_cmd.input, "Scenario or sweep CSV");
  auto* sw_f = sw->add_option("--fixture", sweep_cmd.fixture, "Bundled fixture name (h2_sweep, n2_spa, n2_booster, jellium)");
  sw_i->excludes(sw_f);
  sw->add_option("--format", sweep_cmd.format)->check(CLI::IsMember(formats));
  sw->add_option("--output", sweep_cmd.output, "Output path (default: standard output)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*v) return do_verdict(verdict, out, err);
    if (*m) return do_max_depth(maxd, out, err);
    if (*r) return do_runtime(runtime, out, err);
    if (*cat) return do_catalog(catalog_format, out);
    if (*sp) return do_spectral(spectral, out, err);
    if (*bo) return do_boost(boost, out, err);
    if (*sw) {
      if (sweep_cmd.input.empty() && sweep_cmd.fixture.empty()) {
        throw InputError("--input or --fixture is required");
      }
      return do_sweep(sweep_cmd, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ConvergenceError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitNumericFailure;
  }
  return kExitInputError;
}

}  // namespace gspgate::cli
