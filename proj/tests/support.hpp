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

// Shared generators and independent oracles for the test suites.

#ifndef GATEFORGE_TESTS_SUPPORT_HPP
#define GATEFORGE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>

#include "gateforge/gate_families.hpp"
#include "gateforge/linalg.hpp"

namespace gateforge::testing {

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double angle(std::mt19937_64 &rng) { return uniform(rng, -kPi, kPi); }

inline CMatrix random_complex(std::mt19937_64 &rng, std::size_t dim, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    CMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = Complex(g(rng), g(rng));
        }
    }
    return m;
}

inline CMatrix random_hermitian(std::mt19937_64 &rng, std::size_t dim, double scale = 1.0) {
    const CMatrix a = random_complex(rng, dim, scale);
    return (a + a.adjoint()) * Complex(0.5);
}

// Infinity norm.
inline double max_row_sum(const CMatrix &a) {
    double best = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < a.dim(); ++c) {
            s += std::abs(a(r, c));
        }
        best = std::max(best, s);
    }
    return best;
}

/// exp(A) by scaling and squaring with a degree-20 Taylor core. Works on any
/// square matrix and shares no code with the spectral exponential.
inline CMatrix expm_taylor(const CMatrix &a) {
    int squarings = 0;
    double norm = max_row_sum(a);
    while (norm > 0.25) {
        norm *= 0.5;
        ++squarings;
    }
    const CMatrix scaled = a * Complex(std::ldexp(1.0, -squarings));
    CMatrix term = CMatrix::identity(a.dim());
    CMatrix sum = term;
    for (int k = 1; k <= 20; ++k) {
        term = term * scaled * Complex(1.0 / k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

/// exp(-iH) for a random Hermitian H, through the Taylor oracle.
inline CMatrix random_unitary(std::mt19937_64 &rng, std::size_t dim) {
    const CMatrix h = random_hermitian(rng, dim, 1.0);
    return expm_taylor(h * Complex(0.0, -1.0));
}

/// Leakage by brute force: for each row, the largest squared norm outside
/// span(outputs) over a fine sweep of normalized superpositions of the
/// first two inputs (rows here have at most two inputs).
inline double brute_force_row_leakage(const CMatrix &u, const SemanticRow &row) {
    auto forbidden_norm = [&](const std::vector<Complex> &psi) {
        double leak = 0.0;
        for (std::size_t r = 0; r < u.dim(); ++r) {
            if (std::find(row.outputs.begin(), row.outputs.end(), r) != row.outputs.end()) {
                continue;
            }
            Complex amp = 0.0;
            for (std::size_t k = 0; k < row.inputs.size(); ++k) {
                amp += u(r, row.inputs[k]) * psi[k];
            }
            leak += std::norm(amp);
        }
        return leak;
    };
    if (row.inputs.size() == 1) {
        return forbidden_norm({1.0});
    }
    double best = 0.0;
    constexpr int kTheta = 181, kPhi = 180;
    for (int i = 0; i < kTheta; ++i) {
        const double t = kPi / 2.0 * i / (kTheta - 1);
        for (int j = 0; j < kPhi; ++j) {
            const double p = 2.0 * kPi * j / kPhi;
            best = std::max(best, forbidden_norm({std::cos(t), std::polar(std::sin(t), p)}));
        }
    }
    return best;
}

} // namespace gateforge::testing

#endif // GATEFORGE_TESTS_SUPPORT_HPP
