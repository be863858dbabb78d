#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qiso/trajectory.hpp"

namespace qiso::cli {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(const std::string& name);

// Shortest decimal that round-trips to the same double. Locale-independent.
std::string format_double(double v);

// "lo:hi:steps" -> `steps` evenly spaced values, endpoints inclusive.
std::vector<double> parse_sweep(const std::string& spec);

// Decimal radians, or pi tokens: "pi", "pi/2", "3pi/4", "-pi/4", ...
double parse_angle(const std::string& text);

// One emitted row. Extra columns (shor's residual, horodecki's closed form)
// ride along as named pairs so every command shares one writer.
struct TrajectoryRow {
  TrajectoryRecord record;
  std::vector<std::pair<std::string, double>> extra;
};

void write_rows_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows);
void write_rows_json(std::ostream& out, const std::vector<TrajectoryRow>& rows);
void write_rows(std::ostream& out, const std::vector<TrajectoryRow>& rows,
                OutputFormat format);

}  // namespace qiso::cli
