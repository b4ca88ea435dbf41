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

#include "gateforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gateforge {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_same_dim(const CMatrix &a, const CMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

void require_nonempty(const CMatrix &m, const char *op) {
    if (m.dim() == 0) {
        throw DimensionError(std::string(op) + ": empty matrix");
    }
}

// Plane rotation G = [[c, s], [-conj(s), c]] with real c.
struct Givens {
    double c;
    Complex s;
};

// G * [a; b] = [r; 0].
Givens make_givens(Complex a, Complex b) {
    const double na = std::abs(a);
    const double nb = std::abs(b);
    if (nb == 0.0) {
        return {1.0, 0.0};
    }
    if (na == 0.0) {
        return {0.0, std::conj(b) / nb};
    }
    const double norm = std::hypot(na, nb);
    return {na / norm, (a / na) * std::conj(b) / norm};
}

// Rows i, j of m <- G * rows, restricted to columns [c0, n).
void rotate_rows(CMatrix &m, std::size_t i, std::size_t j, const Givens &g, std::size_t c0) {
    for (std::size_t k = c0; k < m.dim(); ++k) {
        const Complex x = m(i, k);
        const Complex y = m(j, k);
        m(i, k) = g.c * x + g.s * y;
        m(j, k) = -std::conj(g.s) * x + g.c * y;
    }
}

// Columns i, j of m <- columns * G^dagger, restricted to rows [0, r1).
void rotate_cols(CMatrix &m, std::size_t i, std::size_t j, const Givens &g, std::size_t r1) {
    for (std::size_t k = 0; k < r1; ++k) {
        const Complex x = m(k, i);
        const Complex y = m(k, j);
        m(k, i) = g.c * x + std::conj(g.s) * y;
        m(k, j) = -g.s * x + g.c * y;
    }
}

// Householder reduction to upper Hessenberg form: a = q * a_out * q^dagger.
void hessenberg(CMatrix &a, CMatrix &q) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double tail = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            tail += std::norm(a(i, k));
        }
        const double alpha_norm = std::sqrt(tail);
        if (alpha_norm == 0.0) {
            continue;
        }
        const Complex x0 = a(k + 1, k);
        const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
        std::vector<Complex> v(n, 0.0);
        v[k + 1] = x0 + phase * alpha_norm;
        for (std::size_t i = k + 2; i < n; ++i) {
            v[i] = a(i, k);
        }
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) {
            continue;
        }
        // P = I - 2 v v^dagger / (v^dagger v); a <- P a P, q <- q P.
        for (std::size_t c = 0; c < n; ++c) {
            Complex dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) {
                dot += std::conj(v[i]) * a(i, c);
            }
            dot *= 2.0 / vnorm2;
            for (std::size_t i = k + 1; i < n; ++i) {
                a(i, c) -= v[i] * dot;
            }
        }
        for (CMatrix *m : {&a, &q}) {
            for (std::size_t r = 0; r < n; ++r) {
                Complex dot = 0.0;
                for (std::size_t i = k + 1; i < n; ++i) {
                    dot += (*m)(r, i) * v[i];
                }
                dot *= 2.0 / vnorm2;
                for (std::size_t i = k + 1; i < n; ++i) {
                    (*m)(r, i) -= dot * std::conj(v[i]);
                }
            }
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
        }
    }
}

Complex wilkinson_shift(const CMatrix &t, std::size_t iu) {
    const Complex a = t(iu - 1, iu - 1);
    const Complex b = t(iu - 1, iu);
    const Complex c = t(iu, iu - 1);
    const Complex d = t(iu, iu);
    const double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
    if (scale == 0.0) {
        return 0.0;
    }
    const Complex as = a / scale, bs = b / scale, cs = c / scale, ds = d / scale;
    const Complex half_trace = 0.5 * (as + ds);
    const Complex det = as * ds - bs * cs;
    const Complex disc = std::sqrt(half_trace * half_trace - det);
    Complex e1 = half_trace + disc;
    Complex e2 = half_trace - disc;
    // Recompute the smaller root from the product to avoid cancellation.
    if (std::abs(e1) > std::abs(e2)) {
        if (e1 != 0.0) {
            e2 = det / e1;
        }
    } else if (e2 != 0.0) {
        e1 = det / e2;
    }
    return scale * (std::abs(e1 - ds) < std::abs(e2 - ds) ? e1 : e2);
}

// Complex Schur decomposition a = q t q^dagger, t upper triangular.
void complex_schur(CMatrix &t, CMatrix &q) {
    const std::size_t n = t.dim();
    hessenberg(t, q);
    if (n < 2) {
        return;
    }
    const std::size_t max_iterations = 64 * n;
    std::size_t iu = n - 1;
    std::size_t iter = 0;
    std::size_t total = 0;
    auto negligible = [&](std::size_t k) { // subdiagonal entry (k+1, k)
        const double s = std::abs(t(k, k)) + std::abs(t(k + 1, k + 1));
        return std::abs(t(k + 1, k)) <= kEps * std::max(s, kEps);
    };
    while (iu > 0) {
        while (iu > 0 && negligible(iu - 1)) {
            t(iu, iu - 1) = 0.0;
            --iu;
            iter = 0;
        }
        if (iu == 0) {
            break;
        }
        if (++total > max_iterations) {
            throw DomainError("eig_unitary: Schur iteration did not converge");
        }
        ++iter;
        std::size_t il = iu - 1;
        while (il > 0 && !negligible(il - 1)) {
            --il;
        }
        Complex shift;
        if (iter % 10 == 0) {
            // Exceptional shift breaks cycles such as cyclic permutations.
            shift = std::abs(t(iu, iu - 1).real()) +
                    (iu >= 2 ? std::abs(t(iu - 1, iu - 2).real()) : 0.0);
            shift += Complex(0.0, 0.5 * std::abs(t(iu, iu - 1)));
        } else {
            shift = wilkinson_shift(t, iu);
        }
        Givens g = make_givens(t(il, il) - shift, t(il + 1, il));
        rotate_rows(t, il, il + 1, g, il);
        rotate_cols(t, il, il + 1, g, std::min(il + 2, iu) + 1);
        rotate_cols(q, il, il + 1, g, n);
        for (std::size_t i = il + 1; i < iu; ++i) {
            g = make_givens(t(i, i - 1), t(i + 1, i - 1));
            rotate_rows(t, i, i + 1, g, i - 1);
            t(i + 1, i - 1) = 0.0;
            rotate_cols(t, i, i + 1, g, std::min(i + 2, iu) + 1);
            rotate_cols(q, i, i + 1, g, n);
        }
    }
}

// Modified Gram-Schmidt on the given columns, in order.
void orthonormalize(std::vector<std::vector<Complex>> &vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < i; ++j) {
                Complex dot = 0.0;
                for (std::size_t k = 0; k < vs[i].size(); ++k) {
                    dot += std::conj(vs[j][k]) * vs[i][k];
                }
                for (std::size_t k = 0; k < vs[i].size(); ++k) {
                    vs[i][k] -= dot * vs[j][k];
                }
            }
        }
        double norm = 0.0;
        for (const Complex &x : vs[i]) {
            norm += std::norm(x);
        }
        norm = std::sqrt(norm);
        for (Complex &x : vs[i]) {
            x /= norm;
        }
    }
}

} // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0.0)) {}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) {
        throw DimensionError("CMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(data_.size()));
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("CMatrix: rows must form a square matrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> values) {
    CMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex &x : data_) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

bool CMatrix::is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    });
}

std::vector<Complex> CMatrix::column(std::size_t c) const {
    std::vector<Complex> v(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

std::vector<std::vector<Complex>> CMatrix::block(std::span<const std::size_t> rows,
                                                 std::span<const std::size_t> cols) const {
    std::vector<std::vector<Complex>> out(rows.size(), std::vector<Complex>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out[i][j] = (*this)(rows[i], cols[j]);
        }
    }
    return out;
}

CMatrix &CMatrix::operator+=(const CMatrix &o) {
    require_same_dim(*this, o, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &o) {
    require_same_dim(*this, o, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex s) {
    for (Complex &x : data_) {
        x *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const CMatrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw DimensionError("matrix-vector product: dimension mismatch");
    }
    std::vector<Complex> out(a.dim(), 0.0);
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    const std::size_t na = a.dim(), nb = b.dim();
    CMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == 0.0) {
                continue;
            }
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double frobenius_distance(const CMatrix &a, const CMatrix &b) { return (a - b).frobenius_norm(); }

CMatrix commutator(const CMatrix &a, const CMatrix &b) { return a * b - b * a; }

CMatrix anticommutator(const CMatrix &a, const CMatrix &b) { return a * b + b * a; }

UnitarityCheck check_unitary(const CMatrix &m, double tol) {
    require_nonempty(m, "check_unitary");
    const double residual = frobenius_distance(m.adjoint() * m, CMatrix::identity(m.dim()));
    return {residual <= tol, residual};
}

double hermitian_residual(const CMatrix &h) { return frobenius_distance(h, h.adjoint()); }

HermitianSpectrum eig_hermitian(const CMatrix &h, double tol) {
    require_nonempty(h, "eig_hermitian");
    const double asym = hermitian_residual(h);
    if (asym > tol * std::max(1.0, h.frobenius_norm())) {
        throw DomainError("eig_hermitian: matrix is not Hermitian (asymmetry " +
                              std::to_string(asym) + ")",
                          asym);
    }
    const std::size_t n = h.dim();
    CMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) <= 1e-18 * scale) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) {
                    continue;
                }
                const Complex e = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J acts on columns p, q: [[c, s], [-s conj(e), c conj(e)]].
                const Complex jpp = c, jpq = s, jqp = -s * std::conj(e), jqq = c * std::conj(e);
                for (std::size_t k = 0; k < n; ++k) { // a <- a J
                    const Complex x = a(k, p), y = a(k, q);
                    a(k, p) = x * jpp + y * jqp;
                    a(k, q) = x * jpq + y * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) { // a <- J^dagger a
                    const Complex x = a(p, k), y = a(q, k);
                    a(p, k) = std::conj(jpp) * x + std::conj(jqp) * y;
                    a(q, k) = std::conj(jpq) * x + std::conj(jqq) * y;
                }
                for (std::size_t k = 0; k < n; ++k) { // v <- v J
                    const Complex x = v(k, p), y = v(k, q);
                    v(k, p) = x * jpp + y * jqp;
                    v(k, q) = x * jpq + y * jqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    HermitianSpectrum out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.diagonalizer(r, k) = v(r, order[k]);
        }
    }
    return out;
}

CMatrix expm_hermitian(const CMatrix &h, double scale, double tol) {
    const HermitianSpectrum spec = eig_hermitian(h, tol);
    const std::size_t n = h.dim();
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; ++k) {
        phases[k] = std::polar(1.0, -scale * spec.eigenvalues[k]);
    }
    const CMatrix &v = spec.diagonalizer;
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += v(r, k) * phases[k] * std::conj(v(c, k));
            }
            out(r, c) = s;
        }
    }
    return out;
}

Spectrum eig_unitary(const CMatrix &m, double tol) {
    require_nonempty(m, "eig_unitary");
    const UnitarityCheck check = check_unitary(m, tol);
    if (!check.unitary) {
        throw DomainError("eig_unitary: matrix is not unitary (residual " +
                              std::to_string(check.residual) + ")",
                          check.residual);
    }
    const std::size_t n = m.dim();
    CMatrix t = m;
    CMatrix q = CMatrix::identity(n);
    complex_schur(t, q);

    Spectrum out{std::vector<Complex>(n), CMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = t(k, k);
    }
    // Re-orthonormalize each degenerate cluster in index order.
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) {
            continue;
        }
        std::vector<std::size_t> members{i};
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!done[j] && std::abs(out.eigenvalues[j] - out.eigenvalues[i]) <
                                Tolerances::eigen_cluster) {
                members.push_back(j);
            }
        }
        std::vector<std::vector<Complex>> vs;
        for (std::size_t j : members) {
            vs.push_back(q.column(j));
            done[j] = true;
        }
        orthonormalize(vs);
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (std::size_t r = 0; r < n; ++r) {
                out.diagonalizer(r, members[k]) = vs[k][r];
            }
        }
    }
    return out;
}

double principal_phase(Complex u, double cluster_tol) {
    double phase = -std::arg(u);
    if (phase <= -kPi + cluster_tol) {
        phase += 2.0 * kPi;
    }
    return phase;
}

std::vector<EigenCluster> unitary_clusters(const CMatrix &u, double cluster_tol, double tol) {
    const Spectrum spec = eig_unitary(u, tol);
    const std::size_t n = u.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> phases(n);
    for (std::size_t k = 0; k < n; ++k) {
        phases[k] = principal_phase(spec.eigenvalues[k], cluster_tol);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return phases[a] < phases[b]; });

    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t idx : order) {
        if (!groups.empty() &&
            std::abs(spec.eigenvalues[idx] - spec.eigenvalues[groups.back().back()]) < cluster_tol) {
            groups.back().push_back(idx);
        } else {
            groups.push_back({idx});
        }
    }

    std::vector<EigenCluster> clusters;
    clusters.reserve(groups.size());
    for (auto &g : groups) {
        std::sort(g.begin(), g.end());
        EigenCluster c;
        Complex mean = 0.0;
        for (std::size_t idx : g) {
            mean += spec.eigenvalues[idx];
            c.vectors.push_back(spec.diagonalizer.column(idx));
        }
        mean /= static_cast<double>(g.size());
        c.eigenvalue = mean;
        c.principal_phase = principal_phase(mean, cluster_tol);
        orthonormalize(c.vectors);
        clusters.push_back(std::move(c));
    }
    return clusters;
}

CMatrix logm_unitary(const CMatrix &u, const BranchChoice &branch, double delta_t, double hbar) {
    if (!(delta_t > 0.0) || !(hbar > 0.0)) {
        throw DomainError("logm_unitary: delta_t and hbar must be positive");
    }
    const std::vector<EigenCluster> clusters = unitary_clusters(u);
    if (branch.size() != clusters.size()) {
        throw DimensionError("logm_unitary: branch has " + std::to_string(branch.size()) +
                             " integers but the spectrum has " + std::to_string(clusters.size()) +
                             " eigenvalue clusters");
    }
    const std::size_t n = u.dim();
    CMatrix h(n);
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        const double energy =
            hbar * (clusters[k].principal_phase + 2.0 * kPi * static_cast<double>(branch.integers[k])) /
            delta_t;
        for (const auto &v : clusters[k].vectors) {
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    h(r, c) += energy * v[r] * std::conj(v[c]);
                }
            }
        }
    }
    // Symmetrize away rounding.
    CMatrix out = 0.5 * (h + h.adjoint());
    return out;
}

} // namespace gateforge
