#include "gspgate/text_formats.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "gspgate/errors.hpp"
#include "gspgate/pauli.hpp"

namespace gspgate {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long long> to_integer(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

double require_double(std::string_view s, std::size_t line, const char* what) {
  auto v = to_double(s);
  if (!v) throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'", line);
  return *v;
}

long long require_integer(std::string_view s, std::size_t line, const char* what) {
  auto v = to_integer(s);
  if (!v) throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'", line);
  return *v;
}

struct Header {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t line = 0;
};

Header parse_header(const std::vector<Line>& lines, std::string_view keyword) {
  if (lines.empty()) throw ParseError("empty input, expected '" + std::string(keyword) + "' header", 0);
  const Line& first = lines.front();
  if (first.tokens[0] != keyword) {
    throw ParseError("expected header keyword '" + std::string(keyword) + "', got '" +
                         std::string(first.tokens[0]) + "'",
                     first.number);
  }
  if (first.tokens.size() < 2 || first.tokens[1] != "1") {
    throw ParseError("unsupported " + std::string(keyword) + " version", first.number);
  }
  Header h;
  h.line = first.number;
  for (std::size_t i = 2; i < first.tokens.size(); ++i) {
    const auto tok = first.tokens[i];
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("malformed header field '" + std::string(tok) + "'", first.number);
    }
    h.fields.emplace(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
  }
  return h;
}

long long header_integer(const Header& h, std::string_view key) {
  auto it = h.fields.find(key);
  if (it == h.fields.end()) {
    throw ParseError("header is missing '" + std::string(key) + "='", h.line);
  }
  return require_integer(it->second, h.line, it->first.c_str());
}

std::string header_unit(const Header& h) {
  auto it = h.fields.find("unit");
  return it == h.fields.end() ? std::string("Hartree") : it->second;
}

void check_dim(long long dim, const LoadOptions& opts, std::size_t line) {
  if (dim <= 0) throw ParseError("dimension must be positive", line);
  if (dim > opts.max_dim) {
    throw ResourceError("dimension " + std::to_string(dim) + " exceeds the configured cap " +
                        std::to_string(opts.max_dim) + " (GSPGATE_MAX_DIM)");
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Hamiltonian parse_hamx(std::string_view text, const LoadOptions& opts) {
  const auto lines = tokenize(text);
  const Header header = parse_header(lines, "hamx");
  const long long dim = header_integer(header, "dim");
  check_dim(dim, opts, header.line);

  std::vector<MatrixEntry> entries;
  std::set<std::pair<long long, long long>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() < 3 || line.tokens.size() > 4) {
      throw ParseError("expected '<row> <col> <re> [<im>]'", line.number);
    }
    const long long row = require_integer(line.tokens[0], line.number, "row index");
    const long long col = require_integer(line.tokens[1], line.number, "column index");
    const double re = require_double(line.tokens[2], line.number, "real part");
    const double im = line.tokens.size() == 4 ? require_double(line.tokens[3], line.number, "imaginary part") : 0.0;
    if (row < 0 || col < 0 || row >= dim || col >= dim) {
      throw ParseError("index (" + std::to_string(row) + ", " + std::to_string(col) +
                           ") out of range for dim " + std::to_string(dim),
                       line.number);
    }
    if (row > col) {
      throw ParseError("Hermiticity violation: lower-triangle entry (" + std::to_string(row) +
                           ", " + std::to_string(col) + "); store only row <= col",
                       line.number);
    }
    if (row == col && im != 0.0) {
      throw ParseError("Hermiticity violation: diagonal entry with imaginary part", line.number);
    }
    if (!seen.emplace(row, col).second) {
      throw ParseError("duplicate entry (" + std::to_string(row) + ", " + std::to_string(col) + ")",
                       line.number);
    }
    entries.push_back({static_cast<Index>(row), static_cast<Index>(col), Complex(re, im)});
  }
  return Hamiltonian(static_cast<Index>(dim), std::move(entries), header_unit(header));
}

Hamiltonian parse_pauli(std::string_view text, const LoadOptions& opts) {
  const auto lines = tokenize(text);
  const Header header = parse_header(lines, "pauli");
  const long long qubits = header_integer(header, "qubits");
  if (qubits < 0 || qubits > 30) {
    throw ResourceError("qubit count " + std::to_string(qubits) + " is not supported");
  }
  check_dim(1LL << qubits, opts, header.line);

  std::vector<PauliTerm> terms;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    PauliTerm term;
    std::size_t i = 0;
    const double re = require_double(line.tokens[i++], line.number, "coefficient");
    double im = 0.0;
    if (i < line.tokens.size()) {
      if (auto v = to_double(line.tokens[i])) {
        im = *v;
        ++i;
      }
    }
    term.coefficient = Complex(re, im);
    if (i == line.tokens.size()) {
      throw ParseError("term has no Pauli operators (use 'I' for the identity)", line.number);
    }
    for (; i < line.tokens.size(); ++i) {
      const auto tok = line.tokens[i];
      if (tok == "I") continue;
      const char op = tok[0];
      if ((op != 'X' && op != 'Y' && op != 'Z' && op != 'I') || tok.size() < 2) {
        throw ParseError("malformed Pauli factor '" + std::string(tok) + "'", line.number);
      }
      const long long q = require_integer(tok.substr(1), line.number, "qubit index");
      if (q < 0 || q >= qubits) {
        throw ParseError("qubit index " + std::to_string(q) + " out of range for " +
                             std::to_string(qubits) + " qubits",
                         line.number);
      }
      for (const auto& [prev, _] : term.ops) {
        if (prev == q) {
          throw ParseError("qubit " + std::to_string(q) + " repeated in one term", line.number);
        }
      }
      term.ops.emplace_back(static_cast<int>(q), op);
    }
    terms.push_back(std::move(term));
  }

  const auto full = pauli_sum_matrix(terms, static_cast<int>(qubits));
  try {
    return Hamiltonian::from_matrix(full, header_unit(header));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

Hamiltonian load_hamiltonian(std::string_view text, const LoadOptions& opts) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty Hamiltonian input", 0);
  const auto keyword = lines.front().tokens.front();
  if (keyword == "hamx") return parse_hamx(text, opts);
  if (keyword == "pauli") return parse_pauli(text, opts);
  throw ParseError("unknown Hamiltonian format '" + std::string(keyword) +
                       "' (expected hamx or pauli)",
                   lines.front().number);
}

LoadedState parse_state(std::string_view text, const LoadOptions& opts) {
  const auto lines = tokenize(text);
  const Header header = parse_header(lines, "state");
  const long long dim = header_integer(header, "dim");
  check_dim(dim, opts, header.line);

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  std::set<long long> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() < 2 || line.tokens.size() > 3) {
      throw ParseError("expected '<index> <re> [<im>]'", line.number);
    }
    const long long idx = require_integer(line.tokens[0], line.number, "index");
    if (idx < 0 || idx >= dim) {
      throw ParseError("index " + std::to_string(idx) + " out of range for dim " + std::to_string(dim),
                       line.number);
    }
    if (!seen.insert(idx).second) {
      throw ParseError("duplicate amplitude index " + std::to_string(idx), line.number);
    }
    const double re = require_double(line.tokens[1], line.number, "real part");
    const double im = line.tokens.size() == 3 ? require_double(line.tokens[2], line.number, "imaginary part") : 0.0;
    amps(idx) = Complex(re, im);
  }
  const double norm = amps.norm();
  if (!(norm > 0.0)) throw ParseError("state has zero norm", 0);
  LoadedState out{StateVector::normalized(amps), {}};
  if (std::abs(norm - 1.0) > 1e-6) {
    out.warnings.push_back("state norm " + fmt17(norm) + " differs from 1; renormalized");
  }
  return out;
}

std::string write_hamx(const Hamiltonian& h) {
  std::ostringstream os;
  os << "hamx 1 dim=" << h.dim() << " unit=" << h.energy_unit() << '\n';
  for (const auto& e : h.entries()) {
    os << e.row << ' ' << e.col << ' ' << fmt17(e.value.real());
    if (e.value.imag() != 0.0) os << ' ' << fmt17(e.value.imag());
    os << '\n';
  }
  return os.str();
}

std::string write_state(const StateVector& psi) {
  std::ostringstream os;
  os << "state 1 dim=" << psi.dim() << '\n';
  for (Index i = 0; i < psi.dim(); ++i) {
    const Complex a = psi.amplitudes()(i);
    if (a == Complex{}) continue;
    os << i << ' ' << fmt17(a.real());
    if (a.imag() != 0.0) os << ' ' << fmt17(a.imag());
    os << '\n';
  }
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hamiltonian load_hamiltonian_file(const std::filesystem::path& path, const LoadOptions& opts) {
  const std::string text = read_text_file(path);
  try {
    return load_hamiltonian(text, opts);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

LoadedState load_state_file(const std::filesystem::path& path, const LoadOptions& opts) {
  const std::string text = read_text_file(path);
  try {
    return parse_state(text, opts);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

}  // namespace gspgate
