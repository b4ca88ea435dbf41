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

#ifndef GATEFORGE_PAULI_HPP
#define GATEFORGE_PAULI_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gateforge/linalg.hpp"

namespace gateforge {

/// Tensor product of single-qubit Paulis over letters {I, X, Y, Z}.
///
/// The leftmost letter acts on qubit A (the most significant bit of the
/// basis index). Basis index 0 is the all-up state |11...1>, i.e. sigma_z = +1
/// on every qubit.
class PauliString {
  public:
    PauliString() = default;
    /// Throws std::invalid_argument on an empty string or a letter outside IXYZ.
    explicit PauliString(std::string letters);

    const std::string &letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    /// Number of non-identity letters.
    std::size_t weight() const;
    bool is_identity() const { return weight() == 0; }

    static PauliString identity(std::size_t n) { return PauliString(std::string(n, 'I')); }

    // Lexicographic with I < X < Y < Z, which is plain character order.
    friend auto operator<=>(const PauliString &, const PauliString &) = default;

  private:
    std::string letters_;
};

CMatrix string_matrix(const PauliString &s);

/// Real linear combination of Pauli strings on a fixed number of qubits.
/// Coefficients with magnitude at or below kPruneThreshold are dropped.
class PauliPolynomial {
  public:
    static constexpr double kPruneThreshold = 1e-14;
    using TermMap = std::map<PauliString, double>;

    PauliPolynomial() = default;
    explicit PauliPolynomial(std::size_t n_qubits);
    PauliPolynomial(std::size_t n_qubits, std::initializer_list<std::pair<std::string, double>> terms);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    const TermMap &terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of `s`, zero when absent.
    double coefficient(const PauliString &s) const;
    double coefficient(std::string_view s) const { return coefficient(PauliString(std::string(s))); }

    /// Adds `coeff` to the term for `s`, pruning if the sum vanishes.
    void add_term(const PauliString &s, double coeff);
    void add_term(std::string_view s, double coeff) { add_term(PauliString(std::string(s)), coeff); }

    /// Coefficient of the all-identity string.
    double constant_term() const;
    PauliPolynomial without_constant() const;

    CMatrix to_matrix() const;

    PauliPolynomial &operator+=(const PauliPolynomial &o);
    PauliPolynomial &operator*=(double s);
    friend PauliPolynomial operator+(PauliPolynomial a, const PauliPolynomial &b) { return a += b; }
    friend PauliPolynomial operator-(PauliPolynomial a, const PauliPolynomial &b) {
        PauliPolynomial nb = b;
        nb *= -1.0;
        return a += nb;
    }
    friend PauliPolynomial operator*(PauliPolynomial a, double s) { return a *= s; }
    friend PauliPolynomial operator*(double s, PauliPolynomial a) { return a *= s; }
    friend bool operator==(const PauliPolynomial &, const PauliPolynomial &) = default;

  private:
    void check_string(const PauliString &s) const;

    std::size_t n_qubits_ = 0;
    TermMap terms_;
};

/// Largest coefficient difference over the union of both term sets.
double max_coefficient_diff(const PauliPolynomial &a, const PauliPolynomial &b);

/// Pauli expansion c_s = Tr(S H) / 2^n of a Hermitian matrix whose dimension
/// is a power of two.
PauliPolynomial decompose(const CMatrix &h, double tol = Tolerances::hermiticity);

using LocalityProfile = std::map<std::size_t, std::vector<std::pair<PauliString, double>>>;

/// Terms grouped by weight; empty classes are absent.
LocalityProfile locality_profile(const PauliPolynomial &p);

struct CommutationNorms {
    double commutator;
    double anticommutator;
};

/// Frobenius norms of [A, B] and {A, B}.
CommutationNorms commutation_check(const PauliPolynomial &a, const PauliPolynomial &b);

} // namespace gateforge

#endif // GATEFORGE_PAULI_HPP
