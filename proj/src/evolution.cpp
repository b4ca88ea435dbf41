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

#include "gateforge/evolution.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace gateforge {

namespace {

void require_support(double delta_t) {
    if (!(delta_t > 0.0) || !std::isfinite(delta_t)) {
        throw DomainError("protocol support length must be positive");
    }
}

} // namespace

CMatrix evolve_const(const PauliPolynomial &h, double delta_t, double hbar) {
    if (!(delta_t > 0.0) || !(hbar > 0.0)) {
        throw DomainError("evolve_const: delta_t and hbar must be positive");
    }
    return expm_hermitian(h.to_matrix(), delta_t / hbar);
}

std::string_view to_string(ProtocolKind kind) {
    switch (kind) {
    case ProtocolKind::constant:
        return "constant";
    case ProtocolKind::raised_cosine:
        return "raised_cosine";
    case ProtocolKind::table:
        return "table";
    case ProtocolKind::custom:
        return "custom";
    }
    return "constant";
}

ProtocolKind protocol_kind_from_string(std::string_view name) {
    for (ProtocolKind k :
         {ProtocolKind::constant, ProtocolKind::raised_cosine, ProtocolKind::table, ProtocolKind::custom}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown protocol kind \"" + std::string(name) + "\"");
}

Protocol::Protocol(ProtocolKind kind, double t0, double delta_t, double amplitude)
    : kind_(kind), t0_(t0), delta_t_(delta_t), amplitude_(amplitude) {
    require_support(delta_t);
    if (!std::isfinite(t0) || !std::isfinite(amplitude)) {
        throw DomainError("protocol parameters must be finite");
    }
}

Protocol Protocol::constant(double t0, double delta_t, double amplitude) {
    return Protocol(ProtocolKind::constant, t0, delta_t, amplitude);
}

Protocol Protocol::raised_cosine(double t0, double delta_t, double cycles) {
    if (!(cycles > 0.0)) {
        throw DomainError("raised_cosine: cycles must be positive");
    }
    // Integral of 1 - cos(2 pi k s) over s in [0, 1].
    const double mean = 1.0 - std::sin(2.0 * kPi * cycles) / (2.0 * kPi * cycles);
    return raised_cosine(t0, delta_t, cycles, 1.0 / mean);
}

Protocol Protocol::raised_cosine(double t0, double delta_t, double cycles, double amplitude) {
    if (!(cycles > 0.0)) {
        throw DomainError("raised_cosine: cycles must be positive");
    }
    Protocol p(ProtocolKind::raised_cosine, t0, delta_t, amplitude);
    p.cycles_ = cycles;
    return p;
}

Protocol Protocol::table(double t0, double delta_t, std::vector<double> samples, double amplitude) {
    if (samples.size() < 2) {
        throw DomainError("table protocol needs at least two samples");
    }
    Protocol p(ProtocolKind::table, t0, delta_t, amplitude);
    p.samples_ = std::move(samples);
    return p;
}

Protocol Protocol::custom(double t0, double delta_t, double constant, std::vector<CosineTerm> cosines,
                          double amplitude) {
    Protocol p(ProtocolKind::custom, t0, delta_t, amplitude);
    p.constant_ = constant;
    p.cosines_ = std::move(cosines);
    return p;
}

double Protocol::operator()(double t) const {
    if (t < t0_ || t > t0_ + delta_t_) {
        return 0.0;
    }
    const double s = (t - t0_) / delta_t_; // in [0, 1]
    switch (kind_) {
    case ProtocolKind::constant:
        return amplitude_;
    case ProtocolKind::raised_cosine:
        return amplitude_ * (1.0 - std::cos(2.0 * kPi * cycles_ * s));
    case ProtocolKind::table: {
        const double pos = s * static_cast<double>(samples_.size() - 1);
        const std::size_t i = std::min(static_cast<std::size_t>(pos), samples_.size() - 2);
        const double frac = pos - static_cast<double>(i);
        return amplitude_ * (samples_[i] + frac * (samples_[i + 1] - samples_[i]));
    }
    case ProtocolKind::custom: {
        double v = constant_;
        for (const CosineTerm &c : cosines_) {
            v += c.amplitude * std::cos(2.0 * kPi * c.harmonic * s + c.phase);
        }
        return amplitude_ * v;
    }
    }
    return 0.0;
}

std::vector<double> Protocol::breakpoints() const {
    std::vector<double> pts{t0_};
    if (kind_ == ProtocolKind::table) {
        for (std::size_t i = 1; i + 1 < samples_.size(); ++i) {
            pts.push_back(t0_ + delta_t_ * static_cast<double>(i) / static_cast<double>(samples_.size() - 1));
        }
    }
    pts.push_back(t0_ + delta_t_);
    return pts;
}

double protocol_integral(const Protocol &f) {
    using boost::math::quadrature::gauss_kronrod;
    const std::vector<double> pts = f.breakpoints();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        total += gauss_kronrod<double, 31>::integrate([&](double t) { return f(t); }, pts[i], pts[i + 1], 20,
                                                      1e-14);
    }
    return total;
}

ProtocolCheck check_protocol(const Protocol &f) {
    const double integral = protocol_integral(f);
    bool pos = false, neg = false;
    constexpr int kProbe = 4096;
    for (int i = 0; i <= kProbe; ++i) {
        const double v = f(f.t0() + f.delta_t() * static_cast<double>(i) / kProbe);
        pos = pos || v > 1e-12;
        neg = neg || v < -1e-12;
    }
    return {integral, std::abs(integral - f.delta_t()) <= 1e-9 * f.delta_t(), pos && neg};
}

CMatrix evolve_time_ordered(std::span<const ProtocolTerm> terms, std::size_t steps, double hbar) {
    if (terms.empty()) {
        throw std::invalid_argument("evolve_time_ordered: no terms");
    }
    if (steps == 0) {
        throw std::invalid_argument("evolve_time_ordered: steps must be positive");
    }
    if (!(hbar > 0.0)) {
        throw DomainError("evolve_time_ordered: hbar must be positive");
    }
    const double t0 = terms.front().protocol.t0();
    const double span = terms.front().protocol.delta_t();
    const std::size_t n = terms.front().hamiltonian.n_qubits();
    std::vector<CMatrix> mats;
    for (const ProtocolTerm &term : terms) {
        if (term.hamiltonian.n_qubits() != n) {
            throw DimensionError("evolve_time_ordered: qubit count mismatch between terms");
        }
        if (std::abs(term.protocol.t0() - t0) > 1e-12 * (1.0 + std::abs(t0)) ||
            std::abs(term.protocol.delta_t() - span) > 1e-12 * span) {
            throw std::invalid_argument("evolve_time_ordered: protocols must share one support");
        }
        mats.push_back(term.hamiltonian.to_matrix());
    }
    const double dt = span / static_cast<double>(steps);
    CMatrix u = CMatrix::identity(std::size_t{1} << n);
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = t0 + (static_cast<double>(k) + 0.5) * dt;
        CMatrix h(u.dim());
        for (std::size_t j = 0; j < terms.size(); ++j) {
            h += mats[j] * Complex(terms[j].protocol(t));
        }
        u = expm_hermitian(h, dt / hbar) * u;
    }
    return u;
}

CMatrix evolve_protocol(const PauliPolynomial &h, const Protocol &f, std::size_t steps, double hbar) {
    const ProtocolTerm term{h, f};
    return evolve_time_ordered(std::span<const ProtocolTerm>(&term, 1), steps, hbar);
}

SplitReport split_commutes(std::span<const PauliPolynomial> terms) {
    SplitReport report{true, {}};
    std::vector<CMatrix> mats;
    for (const PauliPolynomial &p : terms) {
        if (p.n_qubits() != terms.front().n_qubits()) {
            throw DimensionError("split_commutes: qubit count mismatch");
        }
        mats.push_back(p.to_matrix());
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            const double norm = commutator(mats[i], mats[j]).frobenius_norm();
            report.pairs.push_back({i, j, norm});
            report.commutes = report.commutes && norm < 1e-10;
        }
    }
    return report;
}

VerificationReport verify_gate(const CMatrix &u, const GateSpec &spec, double tol) {
    if (u.dim() != spec.dim()) {
        throw DimensionError("verify_gate: unitary is " + std::to_string(u.dim()) + "x" + std::to_string(u.dim()) +
                             " but spec \"" + spec.name + "\" acts on " + std::to_string(spec.n_qubits) +
                             " qubits");
    }
    VerificationReport report;
    report.tolerance = tol;
    for (const SemanticRow &row : spec.rows) {
        std::vector<std::size_t> forbidden;
        for (std::size_t i = 0; i < u.dim(); ++i) {
            if (std::find(row.outputs.begin(), row.outputs.end(), i) == row.outputs.end()) {
                forbidden.push_back(i);
            }
        }
        // Gram matrix of the forbidden block; its top eigenvalue is the
        // worst-case leakage over span(inputs).
        const auto blk = u.block(forbidden, row.inputs);
        const std::size_t k = row.inputs.size();
        CMatrix gram(k);
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                Complex s = 0.0;
                for (std::size_t r = 0; r < forbidden.size(); ++r) {
                    s += std::conj(blk[r][a]) * blk[r][b];
                }
                gram(a, b) = s;
            }
        }
        const double leak = k == 0 ? 0.0 : std::max(0.0, eig_hermitian(gram).eigenvalues.back());
        report.row_labels.push_back(row.label);
        report.row_leakage.push_back(leak);
        report.worst_leakage = std::max(report.worst_leakage, leak);
    }
    report.passed = report.worst_leakage <= tol;
    return report;
}

PauliPolynomial ResonanceModel::static_part() const {
    PauliPolynomial p(1);
    p.add_term("Z", 0.5 * larmor);
    return p;
}

PauliPolynomial ResonanceModel::transverse_part(double t) const {
    PauliPolynomial p(1);
    p.add_term("X", drive * std::cos(drive_frequency * t));
    p.add_term("Y", drive * std::sin(drive_frequency * t));
    return p;
}

} // namespace gateforge
