#pragma once

// Plain-text Hamiltonian and state formats.
//
//   hamx 1 dim=<n> unit=<tag>        upper-triangle entries, 0-based:
//   <row> <col> <re> [<im>]          row <= col, conjugate symmetry implied
//
//   pauli 1 qubits=<k> unit=<tag>    one term per line:
//   <re> [<im>] <P><q> ...           e.g. "0.5 Z0 Z1"; bare "I" is the identity
//
//   state 1 dim=<n>                  unspecified amplitudes are zero
//   <index> <re> [<im>]
//
// '#' starts a comment. Blank lines are ignored.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gspgate/hamiltonian.hpp"

namespace gspgate {

struct LoadOptions {
  Index max_dim = max_dim_from_env();
};

/// Dispatches on the header keyword (hamx or pauli).
Hamiltonian load_hamiltonian(std::string_view text, const LoadOptions& opts = {});
Hamiltonian parse_hamx(std::string_view text, const LoadOptions& opts = {});
Hamiltonian parse_pauli(std::string_view text, const LoadOptions& opts = {});

struct LoadedState {
  StateVector state;
  std::vector<std::string> warnings;
};

/// Normalizes on load; warns when the stored norm is off by more than 1e-6.
LoadedState parse_state(std::string_view text, const LoadOptions& opts = {});

std::string write_hamx(const Hamiltonian& h);
std::string write_state(const StateVector& psi);

std::string read_text_file(const std::filesystem::path& path);
Hamiltonian load_hamiltonian_file(const std::filesystem::path& path, const LoadOptions& opts = {});
LoadedState load_state_file(const std::filesystem::path& path, const LoadOptions& opts = {});

}  // namespace gspgate
