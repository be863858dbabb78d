#include "emit.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <system_error>

#include "json.hpp"
#include "qiso/errors.hpp"

namespace qiso::cli {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ValidationError("format must be 'csv' or 'json', got '" + name + "'");
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_strict_double(const std::string& text, const char* what) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ValidationError(std::string(what) + ": cannot parse number '" +
                          text + "'");
  return v;
}

}  // namespace

std::vector<double> parse_sweep(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first == std::string::npos ? 0 : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw ValidationError("sweep must be lo:hi:steps, got '" + spec + "'");
  const double lo = parse_strict_double(spec.substr(0, first), "sweep lo");
  const double hi =
      parse_strict_double(spec.substr(first + 1, second - first - 1),
                          "sweep hi");
  unsigned long steps = 0;
  const std::string steps_text = spec.substr(second + 1);
  const char* sb = steps_text.data();
  const auto res = std::from_chars(sb, sb + steps_text.size(), steps);
  if (res.ec != std::errc{} || res.ptr != sb + steps_text.size() || steps == 0)
    throw ValidationError("sweep steps must be a positive integer, got '" +
                          steps_text + "'");
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(lo);
    return out;
  }
  for (unsigned long i = 0; i < steps; ++i)
    out.push_back(lo + (hi - lo) * double(i) / double(steps - 1));
  return out;
}

double parse_angle(const std::string& text) {
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return parse_strict_double(text, "angle");

  double sign = 1.0;
  std::string head = text.substr(0, pos);
  if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
    if (head.front() == '-') sign = -1.0;
    head.erase(head.begin());
  }
  double numer = 1.0;
  if (!head.empty()) numer = parse_strict_double(head, "angle numerator");
  double denom = 1.0;
  const std::string tail = text.substr(pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/')
      throw ValidationError("angle: expected '/denominator' after pi in '" +
                            text + "'");
    denom = parse_strict_double(tail.substr(1), "angle denominator");
    if (denom == 0.0) throw ValidationError("angle: zero denominator");
  }
  return sign * numer * std::numbers::pi / denom;
}

namespace {

void write_row_csv(std::ostream& out, const TrajectoryRow& row) {
  const TrajectoryRecord& r = row.record;
  out << r.step << ',' << format_double(r.error_param) << ','
      << format_double(r.index.alignment_a) << ','
      << format_double(r.index.weight_p) << ',' << format_double(r.coord.x)
      << ',' << format_double(r.coord.y) << ','
      << format_double(r.success_prob);
  for (const auto& [name, value] : row.extra)
    out << ',' << format_double(value);
  out << '\n';
}

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
  out << "step,param,A,p,x,y,success";
  if (!rows.empty())
    for (const auto& [name, value] : rows.front().extra) out << ',' << name;
  out << '\n';
  for (const TrajectoryRow& row : rows) write_row_csv(out, row);
}

void write_rows_json(std::ostream& out,
                     const std::vector<TrajectoryRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TrajectoryRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["step"] = row.record.step;
    obj["param"] = row.record.error_param;
    obj["A"] = row.record.index.alignment_a;
    obj["p"] = row.record.index.weight_p;
    obj["x"] = row.record.coord.x;
    obj["y"] = row.record.coord.y;
    obj["success"] = row.record.success_prob;
    for (const auto& [name, value] : row.extra) obj[name] = value;
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_rows(std::ostream& out, const std::vector<TrajectoryRow>& rows,
                OutputFormat format) {
  if (format == OutputFormat::kCsv)
    write_rows_csv(out, rows);
  else
    write_rows_json(out, rows);
}

}  // namespace qiso::cli
