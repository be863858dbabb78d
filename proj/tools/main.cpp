// qiso: Isotropic Index toolkit for n-qubit mixed states.
//
// Subcommands: index, grover, shor, horodecki. Exit codes: 0 success,
// 2 usage/validation error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qiso/errors.hpp"

namespace {

// Commands write to --out when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_)
        throw qiso::ValidationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotropic Index (Alignment, Weight) toolkit for n-qubit "
               "mixed states"};
  app.require_subcommand(1);

  qiso::cli::IndexOptions index_opt;
  std::string index_ref_path, index_out, index_format;
  long long index_ref_basis = -1;
  auto* index_cmd = app.add_subcommand(
      "index", "Compute the Isotropic Index of a state file");
  index_cmd->add_option("state", index_opt.state_path, "state JSON file")
      ->required();
  index_cmd->add_option("reference", index_ref_path,
                        "pure reference state JSON file");
  index_cmd->add_option("--ref-basis", index_ref_basis,
                        "computational basis index of the reference");
  index_cmd->add_option("--out", index_out, "output path (default stdout)");
  index_cmd->add_option("--format", index_format,
                        "csv|json (default: key=value report)");

  qiso::cli::GroverOptions grover_opt;
  std::string grover_out, grover_format = "csv";
  auto* grover_cmd = app.add_subcommand(
      "grover", "Grover search trajectories under depolarizing noise");
  grover_cmd->add_option("--qubits", grover_opt.qubits, "register size")
      ->capture_default_str();
  grover_cmd->add_option("--target", grover_opt.target, "marked basis index")
      ->capture_default_str();
  grover_cmd
      ->add_option("--error", grover_opt.error, "error model: none|tdch|ldch")
      ->capture_default_str();
  grover_cmd->add_option("--param", grover_opt.params,
                         "error probabilities (one trajectory each)");
  std::size_t grover_steps = 0;
  auto* steps_flag = grover_cmd->add_option(
      "--steps", grover_steps, "iterations (default floor(pi/4 sqrt(N)))");
  grover_cmd
      ->add_option("--ref", grover_opt.ref_mode,
                   "index reference: per-step|target")
      ->capture_default_str();
  grover_cmd->add_option("--out", grover_out, "output path (default stdout)");
  grover_cmd->add_option("--format", grover_format, "csv|json")
      ->capture_default_str();

  qiso::cli::ShorOptions shor_opt;
  std::string shor_out, shor_format = "csv", shor_sweep;
  auto* shor_cmd = app.add_subcommand(
      "shor", "Shor 9-qubit code pipeline under local depolarizing noise");
  shor_cmd->add_option("--alpha", shor_opt.alphas,
                       "per-qubit channel error probabilities");
  shor_cmd->add_option("--alpha-sweep", shor_sweep, "lo:hi:steps");
  shor_cmd->add_option("--theta", shor_opt.theta,
                       "Bloch polar angle (radians or pi tokens)")
      ->capture_default_str();
  shor_cmd->add_option("--phi", shor_opt.phi,
                       "Bloch azimuthal angle (radians or pi tokens)")
      ->capture_default_str();
  shor_cmd->add_option("--out", shor_out, "output path (default stdout)");
  shor_cmd->add_option("--format", shor_format, "csv|json")
      ->capture_default_str();

  qiso::cli::HorodeckiOptions horo_opt;
  std::string horo_out, horo_format = "csv", horo_sweep;
  auto* horo_cmd = app.add_subcommand(
      "horodecki", "Horodecki isotropic states across the alpha interval");
  horo_cmd->add_option("--side-qubits", horo_opt.side_qubits,
                       "qubits per side (state has twice as many)")
      ->capture_default_str();
  horo_cmd->add_option("--alpha-sweep", horo_sweep,
                       "lo:hi:steps (default full interval, 21 points)");
  horo_cmd->add_option("--out", horo_out, "output path (default stdout)");
  horo_cmd->add_option("--format", horo_format, "csv|json")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (index_cmd->parsed()) {
      if (!index_ref_path.empty()) index_opt.ref_path = index_ref_path;
      if (index_ref_basis >= 0)
        index_opt.ref_basis = std::size_t(index_ref_basis);
      if (!index_format.empty())
        index_opt.format = qiso::cli::parse_format(index_format);
      OutputTarget target(index_out);
      qiso::cli::cmd_index(index_opt, target.stream());
    } else if (grover_cmd->parsed()) {
      grover_opt.format = qiso::cli::parse_format(grover_format);
      if (steps_flag->count() > 0) grover_opt.steps = grover_steps;
      OutputTarget target(grover_out);
      qiso::cli::cmd_grover(grover_opt, target.stream());
    } else if (shor_cmd->parsed()) {
      shor_opt.format = qiso::cli::parse_format(shor_format);
      if (!shor_sweep.empty()) shor_opt.alpha_sweep = shor_sweep;
      OutputTarget target(shor_out);
      qiso::cli::cmd_shor(shor_opt, target.stream());
    } else if (horo_cmd->parsed()) {
      horo_opt.format = qiso::cli::parse_format(horo_format);
      if (!horo_sweep.empty()) horo_opt.alpha_sweep = horo_sweep;
      OutputTarget target(horo_out);
      qiso::cli::cmd_horodecki(horo_opt, target.stream());
    }
  } catch (const qiso::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const qiso::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
