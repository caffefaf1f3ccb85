#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gspgate/criteria.hpp"
#include "gspgate/scenario.hpp"

namespace gspgate {

/// Six significant digits (%.6g); NaN prints as an empty field.
std::string format_number(double v);

std::string csv_escape(std::string_view field);

/// Splits one CSV record; handles double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

std::string join_warnings(const std::vector<std::string>& warnings);

inline constexpr const char* kReportHeader =
    "scenario,value,lhs,rhs,margin,accepted,max_depth,runtime,runtime_ref,warnings";

std::string report_csv(const std::vector<ReportRow>& rows);
std::string curve_csv(const Curve& curve);

}  // namespace gspgate
