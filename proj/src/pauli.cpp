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

#include "gateforge/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace gateforge {

namespace {

const CMatrix &letter_matrix(char c) {
    static const CMatrix i{{1.0, 0.0}, {0.0, 1.0}};
    static const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    static const CMatrix y{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
    static const CMatrix z{{1.0, 0.0}, {0.0, -1.0}};
    switch (c) {
    case 'X':
        return x;
    case 'Y':
        return y;
    case 'Z':
        return z;
    default:
        return i;
    }
}

std::size_t qubits_for_dim(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if ((std::size_t{1} << n) != dim || dim < 2) {
        throw DimensionError("decompose: dimension " + std::to_string(dim) + " is not a power of two");
    }
    return n;
}

} // namespace

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("PauliString: empty string");
    }
    for (char c : letters_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("PauliString: invalid letter '" + std::string(1, c) + "' in \"" +
                                        letters_ + "\"");
        }
    }
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(),
                                                  [](char c) { return c != 'I'; }));
}

CMatrix string_matrix(const PauliString &s) {
    CMatrix m = letter_matrix(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
        m = kron(m, letter_matrix(s[i]));
    }
    return m;
}

PauliPolynomial::PauliPolynomial(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("PauliPolynomial: n_qubits must be positive");
    }
}

PauliPolynomial::PauliPolynomial(std::size_t n_qubits,
                                 std::initializer_list<std::pair<std::string, double>> terms)
    : PauliPolynomial(n_qubits) {
    for (const auto &[s, c] : terms) {
        add_term(PauliString(s), c);
    }
}

void PauliPolynomial::check_string(const PauliString &s) const {
    if (s.size() != n_qubits_) {
        throw DimensionError("PauliPolynomial: string \"" + s.letters() + "\" does not act on " +
                             std::to_string(n_qubits_) + " qubits");
    }
}

double PauliPolynomial::coefficient(const PauliString &s) const {
    const auto it = terms_.find(s);
    return it == terms_.end() ? 0.0 : it->second;
}

void PauliPolynomial::add_term(const PauliString &s, double coeff) {
    check_string(s);
    if (!std::isfinite(coeff)) {
        throw DomainError("PauliPolynomial: non-finite coefficient for \"" + s.letters() + "\"");
    }
    const double updated = coefficient(s) + coeff;
    if (std::abs(updated) <= kPruneThreshold) {
        terms_.erase(s);
    } else {
        terms_[s] = updated;
    }
}

double PauliPolynomial::constant_term() const { return coefficient(PauliString::identity(n_qubits_)); }

PauliPolynomial PauliPolynomial::without_constant() const {
    PauliPolynomial out = *this;
    out.terms_.erase(PauliString::identity(n_qubits_));
    return out;
}

CMatrix PauliPolynomial::to_matrix() const {
    CMatrix m(std::size_t{1} << n_qubits_);
    for (const auto &[s, c] : terms_) {
        m += string_matrix(s) * Complex(c);
    }
    return m;
}

PauliPolynomial &PauliPolynomial::operator+=(const PauliPolynomial &o) {
    if (o.n_qubits_ != n_qubits_) {
        throw DimensionError("PauliPolynomial: qubit count mismatch");
    }
    for (const auto &[s, c] : o.terms_) {
        add_term(s, c);
    }
    return *this;
}

PauliPolynomial &PauliPolynomial::operator*=(double s) {
    TermMap scaled;
    for (const auto &[str, c] : terms_) {
        if (std::abs(c * s) > kPruneThreshold) {
            scaled.emplace(str, c * s);
        }
    }
    terms_ = std::move(scaled);
    return *this;
}

double max_coefficient_diff(const PauliPolynomial &a, const PauliPolynomial &b) {
    double m = 0.0;
    for (const auto &[s, c] : a.terms()) {
        m = std::max(m, std::abs(c - b.coefficient(s)));
    }
    for (const auto &[s, c] : b.terms()) {
        m = std::max(m, std::abs(c - a.coefficient(s)));
    }
    return m;
}

PauliPolynomial decompose(const CMatrix &h, double tol) {
    const std::size_t n = qubits_for_dim(h.dim());
    const double asym = hermitian_residual(h);
    if (asym > tol * std::max(1.0, h.frobenius_norm())) {
        throw DomainError("decompose: matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")",
                          asym);
    }
    PauliPolynomial out(n);
    const double norm = static_cast<double>(h.dim());
    std::string letters(n, 'I');
    const std::size_t count = std::size_t{1} << (2 * n);
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t code = 0; code < count; ++code) {
        for (std::size_t q = 0; q < n; ++q) {
            letters[q] = kLetters[(code >> (2 * (n - 1 - q))) & 3];
        }
        const PauliString s(letters);
        // S has one nonzero per row.
        const CMatrix sm = string_matrix(s);
        Complex tr = 0.0;
        for (std::size_t r = 0; r < h.dim(); ++r) {
            for (std::size_t c = 0; c < h.dim(); ++c) {
                if (sm(r, c) != 0.0) {
                    tr += sm(r, c) * h(c, r);
                }
            }
        }
        const double coeff = tr.real() / norm;
        if (std::abs(coeff) > PauliPolynomial::kPruneThreshold) {
            out.add_term(s, coeff);
        }
    }
    return out;
}

LocalityProfile locality_profile(const PauliPolynomial &p) {
    LocalityProfile profile;
    for (const auto &[s, c] : p.terms()) {
        profile[s.weight()].emplace_back(s, c);
    }
    return profile;
}

CommutationNorms commutation_check(const PauliPolynomial &a, const PauliPolynomial &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("commutation_check: qubit count mismatch");
    }
    const CMatrix ma = a.to_matrix();
    const CMatrix mb = b.to_matrix();
    return {commutator(ma, mb).frobenius_norm(), anticommutator(ma, mb).frobenius_norm()};
}

} // namespace gateforge
