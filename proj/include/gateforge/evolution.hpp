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

#ifndef GATEFORGE_EVOLUTION_HPP
#define GATEFORGE_EVOLUTION_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gateforge/gate_families.hpp"
#include "gateforge/linalg.hpp"
#include "gateforge/pauli.hpp"

namespace gateforge {

/// exp(-i H delta_t / hbar).
CMatrix evolve_const(const PauliPolynomial &h, double delta_t = 1.0, double hbar = 1.0);

enum class ProtocolKind { constant, raised_cosine, table, custom };

std::string_view to_string(ProtocolKind kind);
/// Throws std::invalid_argument for unknown names.
ProtocolKind protocol_kind_from_string(std::string_view name);

/// amplitude * cos(2 pi harmonic (t - t0) / delta_t + phase).
struct CosineTerm {
    double amplitude = 0.0;
    double harmonic = 0.0;
    double phase = 0.0;
};

/// Scalar time modulation f(t) of a fixed Hamiltonian, nonzero only on
/// [t0, t0 + delta_t].
class Protocol {
  public:
    /// f = amplitude.
    static Protocol constant(double t0, double delta_t, double amplitude = 1.0);
    /// f = amplitude (1 - cos(2 pi cycles (t - t0) / delta_t)). This overload
    /// picks the amplitude that makes the integral equal delta_t.
    static Protocol raised_cosine(double t0, double delta_t, double cycles = 1.0);
    static Protocol raised_cosine(double t0, double delta_t, double cycles, double amplitude);
    /// Piecewise-linear through `samples` at equally spaced nodes spanning the
    /// support (at least two samples), times amplitude.
    static Protocol table(double t0, double delta_t, std::vector<double> samples, double amplitude = 1.0);
    /// amplitude (constant + sum of cosine terms).
    static Protocol custom(double t0, double delta_t, double constant, std::vector<CosineTerm> cosines,
                           double amplitude = 1.0);

    double operator()(double t) const;

    ProtocolKind kind() const noexcept { return kind_; }
    double t0() const noexcept { return t0_; }
    double delta_t() const noexcept { return delta_t_; }
    double amplitude() const noexcept { return amplitude_; }
    double cycles() const noexcept { return cycles_; }
    double constant_part() const noexcept { return constant_; }
    const std::vector<double> &samples() const noexcept { return samples_; }
    const std::vector<CosineTerm> &cosines() const noexcept { return cosines_; }

    /// Points inside the support where f may have a kink, plus both ends.
    std::vector<double> breakpoints() const;

  private:
    Protocol(ProtocolKind kind, double t0, double delta_t, double amplitude);

    ProtocolKind kind_ = ProtocolKind::constant;
    double t0_ = 0.0;
    double delta_t_ = 1.0;
    double amplitude_ = 1.0;
    double cycles_ = 1.0;
    double constant_ = 0.0;
    std::vector<double> samples_;
    std::vector<CosineTerm> cosines_;
};

/// Integral of f over its support (adaptive Gauss-Kronrod per smooth piece).
double protocol_integral(const Protocol &f);

struct ProtocolCheck {
    double integral;
    /// |integral - delta_t| <= 1e-9 delta_t.
    bool valid;
    /// f takes both signs somewhere on the support.
    bool changes_sign;
};

ProtocolCheck check_protocol(const Protocol &f);

/// A Hamiltonian term switched by its own protocol.
struct ProtocolTerm {
    PauliPolynomial hamiltonian;
    Protocol protocol;
};

/// Time-ordered product of midpoint factors exp(-i sum_j f_j(t_k) H_j dt / hbar),
/// later times to the left. All protocols must share one support.
CMatrix evolve_time_ordered(std::span<const ProtocolTerm> terms, std::size_t steps = 256, double hbar = 1.0);

/// evolve_time_ordered for the single term f(t) H.
CMatrix evolve_protocol(const PauliPolynomial &h, const Protocol &f, std::size_t steps = 256,
                        double hbar = 1.0);

struct PairCommutator {
    std::size_t first;
    std::size_t second;
    double norm;
};

struct SplitReport {
    bool commutes;
    std::vector<PairCommutator> pairs;
};

/// True iff every pairwise commutator has Frobenius norm below 1e-10.
SplitReport split_commutes(std::span<const PauliPolynomial> terms);

struct VerificationReport {
    bool passed = false;
    std::vector<std::string> row_labels;
    std::vector<double> row_leakage;
    double worst_leakage = 0.0;
    double tolerance = Tolerances::verification;
};

/// For every truth-table row, the largest squared amplitude any normalized
/// state in span(inputs) sends outside span(outputs). Phases of the outputs
/// are never constrained.
VerificationReport verify_gate(const CMatrix &u, const GateSpec &spec, double tol = Tolerances::verification);

/// Paramagnetic-resonance NOT: a static z field plus a transverse field
/// rotating in the xy plane. Its pieces do not commute, so it serves as the
/// counterexample for per-term protocols.
struct ResonanceModel {
    double larmor = 1.0;          // static part (larmor / 2) Z
    double drive = 0.5;           // transverse amplitude
    double drive_frequency = 1.0; // rotation rate of the transverse field

    PauliPolynomial static_part() const;
    PauliPolynomial transverse_part(double t) const;
};

} // namespace gateforge

#endif // GATEFORGE_EVOLUTION_HPP
