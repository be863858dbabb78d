#include "statefile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qiso::cli {

namespace {

using nlohmann::ordered_json;

std::vector<double> number_array(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ValidationError(std::string("state file: missing array field '") +
                          field + "'");
  std::vector<double> out;
  out.reserve(j[field].size());
  for (const auto& v : j[field]) {
    if (!v.is_number())
      throw ValidationError(std::string("state file: non-numeric entry in '") +
                            field + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

StateFile parse_state_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("state file: JSON parse error: ") +
                          e.what());
  }
  StateFile sf;
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_unsigned())
    throw ValidationError("state file: missing unsigned field 'n_qubits'");
  sf.n_qubits = j["n_qubits"].get<std::size_t>();
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("state file: missing string field 'kind'");
  sf.kind = j["kind"].get<std::string>();
  if (sf.kind != "pure" && sf.kind != "density")
    throw ValidationError("state file: kind must be 'pure' or 'density', got '" +
                          sf.kind + "'");
  sf.re = number_array(j, "re");
  sf.im = number_array(j, "im");
  if (sf.re.size() != sf.im.size())
    throw ValidationError("state file: 're' and 'im' lengths differ");
  return sf;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("state file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_file(buf.str());
}

void write_state_file(std::ostream& out, const StateFile& sf) {
  ordered_json j;
  j["n_qubits"] = sf.n_qubits;
  j["kind"] = sf.kind;
  j["re"] = sf.re;
  j["im"] = sf.im;
  out << j.dump(2) << '\n';
}

StateFile to_state_file(const PureState& s) {
  StateFile sf;
  sf.n_qubits = s.n_qubits();
  sf.kind = "pure";
  sf.re.reserve(s.dim());
  sf.im.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    sf.re.push_back(s.amplitude(i).real());
    sf.im.push_back(s.amplitude(i).imag());
  }
  return sf;
}

StateFile to_state_file(const DensityMatrix& rho) {
  StateFile sf;
  sf.n_qubits = rho.n_qubits();
  sf.kind = "density";
  const std::size_t dim = rho.dim();
  sf.re.reserve(dim * dim);
  sf.im.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      sf.re.push_back(rho.matrix()(i, j).real());
      sf.im.push_back(rho.matrix()(i, j).imag());
    }
  return sf;
}

LoadedState load_state(const StateFile& sf) {
  const std::size_t dim = std::size_t{1} << sf.n_qubits;
  if (sf.kind == "pure") {
    if (sf.re.size() != dim)
      throw ValidationError("state file: pure state needs 2^n amplitudes, got " +
                            std::to_string(sf.re.size()));
    std::vector<Complex> amps(dim);
    for (std::size_t i = 0; i < dim; ++i) amps[i] = {sf.re[i], sf.im[i]};
    return PureState(sf.n_qubits, std::move(amps));
  }
  if (sf.re.size() != dim * dim)
    throw ValidationError(
        "state file: density matrix needs 2^n x 2^n entries, got " +
        std::to_string(sf.re.size()));
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = {sf.re[i * dim + j], sf.im[i * dim + j]};
  DensityMatrix rho(sf.n_qubits, std::move(m));
  validate_density_spectrum(rho);
  return rho;
}

LoadedState load_state_from_path(const std::string& path) {
  return load_state(read_state_file(path));
}

DensityMatrix as_density(const LoadedState& state) {
  if (std::holds_alternative<PureState>(state))
    return pure_to_density(std::get<PureState>(state));
  return std::get<DensityMatrix>(state);
}

}  // namespace qiso::cli
