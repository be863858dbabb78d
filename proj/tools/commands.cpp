#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qiso/grover.hpp"
#include "qiso/horodecki.hpp"
#include "qiso/isoindex.hpp"
#include "qiso/shor.hpp"
#include "statefile.hpp"

namespace qiso::cli {

namespace {

// Tiny magnitudes in the human-facing report are round-off; snap for
// readability. Trajectory files keep raw values.
double snap(double v) { return std::abs(v) < 1e-12 ? 0.0 : v; }

std::string report_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", snap(v));
  return buf;
}

}  // namespace

void cmd_index(const IndexOptions& opt, std::ostream& out) {
  if (opt.ref_path.has_value() == opt.ref_basis.has_value())
    throw ValidationError(
        "index: give exactly one of a reference state file or --ref-basis");

  const DensityMatrix rho = as_density(load_state_from_path(opt.state_path));

  std::optional<PureState> ref;
  if (opt.ref_path) {
    const LoadedState loaded = load_state_from_path(*opt.ref_path);
    if (!std::holds_alternative<PureState>(loaded))
      throw ValidationError("index: reference state must be pure");
    ref = std::get<PureState>(loaded);
  } else {
    if (*opt.ref_basis >= rho.dim())
      throw ValidationError("index: --ref-basis out of range");
    ref = PureState::basis(rho.n_qubits(), *opt.ref_basis);
  }
  if (ref->dim() != rho.dim())
    throw DimensionMismatch("index: state and reference dimensions differ");

  const IsoIndex idx = isotropic_index(rho, *ref);
  const TriangleCoord coord = triangle_coords(idx);
  const bool iso = is_isotropic_error_state(rho, *ref, 1e-10);
  if (!opt.format) {
    out << "A=" << report_double(idx.alignment_a)
        << " p=" << report_double(idx.weight_p)
        << " x=" << report_double(coord.x) << " y=" << report_double(coord.y)
        << " isotropic_error_state=" << (iso ? "true" : "false") << '\n';
  } else if (*opt.format == OutputFormat::kCsv) {
    out << "A,p,x,y,isotropic_error_state\n"
        << format_double(idx.alignment_a) << ',' << format_double(idx.weight_p)
        << ',' << format_double(coord.x) << ',' << format_double(coord.y)
        << ',' << (iso ? "true" : "false") << '\n';
  } else {
    out << "{\n  \"A\": " << format_double(idx.alignment_a)
        << ",\n  \"p\": " << format_double(idx.weight_p)
        << ",\n  \"x\": " << format_double(coord.x)
        << ",\n  \"y\": " << format_double(coord.y)
        << ",\n  \"isotropic_error_state\": " << (iso ? "true" : "false")
        << "\n}\n";
  }
}

void cmd_grover(const GroverOptions& opt, std::ostream& out) {
  GroverError model;
  if (opt.error == "none")
    model = GroverError::kNone;
  else if (opt.error == "tdch")
    model = GroverError::kTotalDepolarizing;
  else if (opt.error == "ldch")
    model = GroverError::kLocalDepolarizing;
  else
    throw ValidationError("grover: --error must be none, tdch or ldch");

  GroverReference ref_mode;
  if (opt.ref_mode == "per-step")
    ref_mode = GroverReference::kPerStepNoiseless;
  else if (opt.ref_mode == "target")
    ref_mode = GroverReference::kTarget;
  else
    throw ValidationError("grover: --ref must be per-step or target");

  if (opt.qubits == 0 || opt.qubits > 10)
    throw ValidationError("grover: --qubits must be in 1..10");

  std::vector<double> params = opt.params;
  if (model == GroverError::kNone)
    params = {0.0};
  else if (params.empty())
    throw ValidationError("grover: --param is required for tdch/ldch");
  std::sort(params.begin(), params.end());

  GroverConfig cfg;
  cfg.n_qubits = opt.qubits;
  cfg.target = opt.target;
  cfg.steps = opt.steps.value_or(GroverConfig::optimal_steps(opt.qubits));
  cfg.error_model = model;

  std::vector<TrajectoryRow> rows;
  for (double param : params) {
    cfg.error_param = param;
    for (const TrajectoryRecord& rec : grover_run(cfg, ref_mode))
      rows.push_back({rec, {}});
  }
  write_rows(out, rows, opt.format);
}

void cmd_shor(const ShorOptions& opt, std::ostream& out) {
  if (opt.alphas.empty() == !opt.alpha_sweep.has_value())
    throw ValidationError("shor: give exactly one of --alpha or --alpha-sweep");
  std::vector<double> alphas = opt.alphas;
  if (opt.alpha_sweep) alphas = parse_sweep(*opt.alpha_sweep);
  std::sort(alphas.begin(), alphas.end());

  const PureState psi =
      PureState::bloch(parse_angle(opt.theta), parse_angle(opt.phi));

  std::vector<TrajectoryRow> rows;
  for (double alpha : alphas) {
    const TrajectoryRecord rec = shor_run({psi, alpha});
    const double approx_residual =
        rec.success_prob - (1.0 - rec.index.weight_p / 2.0);
    rows.push_back({rec, {{"residual", approx_residual}}});
  }
  write_rows(out, rows, opt.format);
}

void cmd_horodecki(const HorodeckiOptions& opt, std::ostream& out) {
  if (opt.side_qubits == 0 || opt.side_qubits > 4)
    throw ValidationError("horodecki: --side-qubits must be in 1..4");
  std::vector<double> alphas;
  if (opt.alpha_sweep) {
    alphas = parse_sweep(*opt.alpha_sweep);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g:1:21",
                  horodecki_alpha_min(opt.side_qubits));
    alphas = parse_sweep(buf);
  }
  std::sort(alphas.begin(), alphas.end());
  const double lo = horodecki_alpha_min(opt.side_qubits);
  for (double a : alphas)
    if (a < lo - 1e-12 || a > 1.0 + 1e-12)
      throw AlphaOutOfRange("horodecki: alpha " + std::to_string(a) +
                            " outside [" + std::to_string(lo) + ", 1]");

  const PureState phi = horodecki_reference(opt.side_qubits);
  std::vector<TrajectoryRow> rows;
  for (double alpha : alphas) {
    const DensityMatrix rho = horodecki_state(opt.side_qubits, alpha);
    const IsoIndex idx = isotropic_index(rho, phi);
    const IsoIndex closed = horodecki_index_closed_form(opt.side_qubits, alpha);
    const TrajectoryRecord rec{0, alpha, idx, triangle_coords(idx),
                               rho.expectation(phi)};
    rows.push_back(
        {rec, {{"A_closed", closed.alignment_a}, {"p_closed", closed.weight_p}}});
  }
  write_rows(out, rows, opt.format);
}

}  // namespace qiso::cli
