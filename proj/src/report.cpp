#include "gspgate/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gspgate {

std::string format_number(double v) {
  if (std::isnan(v)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string out;
  for (const auto& w : warnings) {
    if (!out.empty()) out += "; ";
    out += w;
  }
  return out;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << kReportHeader << '\n';
  for (const auto& r : rows) {
    os << csv_escape(r.scenario) << ',' << csv_escape(r.value) << ',' << format_number(r.lhs) << ','
       << format_number(r.rhs) << ',' << format_number(r.margin) << ','
       << (r.accepted ? "true" : "false") << ',' << format_number(r.max_depth) << ','
       << format_number(r.runtime) << ',' << format_number(r.runtime_ref) << ','
       << csv_escape(join_warnings(r.warnings)) << '\n';
  }
  return os.str();
}

std::string curve_csv(const Curve& curve) {
  std::ostringstream os;
  os << "gamma0,d_max\n";
  for (const auto& p : curve.points) {
    os << format_number(p.gamma0) << ',' << format_number(p.d_max) << '\n';
  }
  return os.str();
}

}  // namespace gspgate
