#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "emit.hpp"

namespace qiso::cli {

struct IndexOptions {
  std::string state_path;
  std::optional<std::string> ref_path;
  std::optional<std::size_t> ref_basis;
  // Default: the key=value report line. csv/json select machine formats.
  std::optional<OutputFormat> format;
};

struct GroverOptions {
  std::size_t qubits = 4;
  std::size_t target = 0;
  std::string error = "none";  // none | tdch | ldch
  std::vector<double> params;  // gamma/alpha values; {0} when none
  std::optional<std::size_t> steps;
  std::string ref_mode = "per-step";  // per-step | target
  OutputFormat format = OutputFormat::kCsv;
};

struct ShorOptions {
  std::vector<double> alphas;
  std::optional<std::string> alpha_sweep;
  std::string theta = "pi/2";
  std::string phi = "pi/4";
  OutputFormat format = OutputFormat::kCsv;
};

struct HorodeckiOptions {
  std::size_t side_qubits = 1;
  std::optional<std::string> alpha_sweep;  // default: full range, 21 points
  OutputFormat format = OutputFormat::kCsv;
};

// Each command writes its report to `out` and throws ValidationError /
// NumericalError on bad input; main maps those to exit codes 2 / 3.
void cmd_index(const IndexOptions& opt, std::ostream& out);
void cmd_grover(const GroverOptions& opt, std::ostream& out);
void cmd_shor(const ShorOptions& opt, std::ostream& out);
void cmd_horodecki(const HorodeckiOptions& opt, std::ostream& out);

}  // namespace qiso::cli
