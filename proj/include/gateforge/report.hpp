// Copyright 2026 The GateForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATEFORGE_REPORT_HPP
#define GATEFORGE_REPORT_HPP

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gateforge/evolution.hpp"
#include "gateforge/linalg.hpp"
#include "gateforge/pauli.hpp"
#include "gateforge/search.hpp"

namespace gateforge {

inline constexpr std::string_view kSchema = "gateforge/1";

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input. Maps to exit code 2.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that breaks a physical constraint. Maps to exit code 3.
class ConstraintError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// "%.17g", with ".0" appended to integral values.
/// Throws InputError for NaN or infinity.
std::string format_double(double v);

/// Two-space indented JSON with a trailing newline. Key order is preserved
/// and every floating-point number goes through format_double.
std::string dump_json(const Json &j);

/// Throws InputError naming `what` on a syntax error.
Json parse_json_text(std::string_view text, std::string_view what);

/// Reads `source` as inline JSON when it starts with '{' or '[', as stdin
/// when it is "-", and as a file path otherwise.
Json load_json_argument(const std::string &source, std::string_view what);

std::string read_text_file(const std::string &path);
/// Writes to `path`, or to stdout when `path` is empty or "-".
void write_text(const std::string &path, std::string_view text);

// -- Schema helpers ----------------------------------------------------------

/// Throws InputError if `obj` is not an object, lacks a required key, or has
/// a key outside required + optional. A "schema" key must equal kSchema.
void check_fields(const Json &obj, std::string_view what, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {});

double get_number(const Json &obj, std::string_view key, std::string_view what);
double get_number_or(const Json &obj, std::string_view key, double fallback, std::string_view what);
long get_integer(const Json &obj, std::string_view key, std::string_view what);
std::string get_string(const Json &obj, std::string_view key, std::string_view what);

// -- Reports -----------------------------------------------------------------

Json polynomial_to_json(const PauliPolynomial &p);
PauliPolynomial polynomial_from_json(const Json &terms, std::size_t n_qubits);

/// {"real": [[...]], "imag": [[...]]}, row-major.
Json matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const Json &j);

struct HamiltonianReport {
    std::string family;
    std::size_t n_qubits = 0;
    double hbar = 1.0;
    double delta_t = 1.0;
    PauliPolynomial hamiltonian;
    std::vector<double> energies;
    std::vector<long> branch;
};

/// Energies are the ascending eigenvalues of H and the branch integers are
/// those that take exp(-i H dt / hbar) back to them.
HamiltonianReport make_hamiltonian_report(std::string family, const PauliPolynomial &h, double delta_t,
                                          double hbar);

Json to_json(const HamiltonianReport &r);
/// Only "schema", "kind", "n_qubits" and "terms" are required; derived
/// fields are accepted and ignored.
HamiltonianReport hamiltonian_report_from_json(const Json &j);

Json to_json(const VerificationReport &r, std::string_view spec_name);

Json protocol_to_json(const Protocol &p);
/// {kind, amplitude, t0, delta_t, params}. A raised cosine without an
/// amplitude is normalized.
Protocol protocol_from_json(const Json &j);

Json to_json(const ProtocolCheck &c);

Json ansatz_to_json(const CouplingAnsatz &a);
/// Either {"name", "n_qubits", "fields"} for a built-in family or
/// {"n_qubits", "terms", "bounds", "two_spin_only"}, where each term is a
/// string or a list of strings sharing one coefficient.
CouplingAnsatz ansatz_from_json(const Json &j, double delta_t, double hbar);

Json config_to_json(const SearchConfig &c);
SearchConfig config_from_json(const Json &j);

Json to_json(const SearchResult &r, const CouplingAnsatz &a, std::string_view spec_name,
             const SearchConfig &config, double delta_t, double hbar);
/// restart,evaluation,best_leakage
std::string history_csv(const SearchResult &r);

/// Everything needed to rerun a command. Timing lives here, never in the
/// data reports.
struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    Json config;
    std::optional<std::uint64_t> seed;
    std::string version;
    std::string started_at; // UTC, ISO 8601
    double wall_clock_seconds = 0.0;
    int exit_code = 0;
};

Json to_json(const RunManifest &m);

} // namespace gateforge

#endif // GATEFORGE_REPORT_HPP
