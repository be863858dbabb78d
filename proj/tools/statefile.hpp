#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qiso/states.hpp"

namespace qiso::cli {

// On-disk state document: JSON with fields n_qubits, kind ("pure" or
// "density"), re, im. Density matrices are row-major; pure states a single
// vector pair. Serialization is shortest-round-trip decimal, so a write/read
// cycle reproduces every entry bit-exactly.
struct StateFile {
  std::size_t n_qubits = 0;
  std::string kind;
  std::vector<double> re;
  std::vector<double> im;
};

using LoadedState = std::variant<PureState, DensityMatrix>;

StateFile parse_state_file(const std::string& text);
StateFile read_state_file(const std::string& path);
void write_state_file(std::ostream& out, const StateFile& sf);

StateFile to_state_file(const PureState& s);
StateFile to_state_file(const DensityMatrix& rho);

// Validates the document and builds the state; throws ValidationError (or a
// subclass naming the violated invariant) on anything malformed. Density
// inputs get the full spectral check.
LoadedState load_state(const StateFile& sf);
LoadedState load_state_from_path(const std::string& path);

// Any loaded state as a density operator.
DensityMatrix as_density(const LoadedState& state);

}  // namespace qiso::cli
