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

#ifndef GATEFORGE_LINALG_HPP
#define GATEFORGE_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gateforge {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Default tolerances shared by every module.
struct Tolerances {
    static constexpr double unitarity = 1e-10;
    static constexpr double hermiticity = 1e-10;
    static constexpr double eigen_cluster = 1e-8;
    static constexpr double verification = 1e-9;
};

/// Thrown when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates a mathematical precondition (not unitary,
/// not Hermitian, inconsistent parameters). `residual()` carries the size of
/// the violation when one is meaningful.
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string &what, double residual = 0.0)
        : std::domain_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// Dense square complex matrix, row-major.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim);
    CMatrix(std::size_t dim, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t dim);
    static CMatrix zeros(std::size_t dim) { return CMatrix(dim); }
    static CMatrix diagonal(std::span<const Complex> values);

    std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    CMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    bool is_finite() const;

    /// Column `c` as a vector.
    std::vector<Complex> column(std::size_t c) const;
    /// Submatrix with the given rows and columns (need not be square).
    std::vector<std::vector<Complex>> block(std::span<const std::size_t> rows,
                                            std::span<const std::size_t> cols) const;

    CMatrix &operator+=(const CMatrix &o);
    CMatrix &operator-=(const CMatrix &o);
    CMatrix &operator*=(Complex s);

    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
    friend std::vector<Complex> operator*(const CMatrix &a, std::span<const Complex> v);
    friend bool operator==(const CMatrix &a, const CMatrix &b) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

CMatrix kron(const CMatrix &a, const CMatrix &b);
/// Largest elementwise modulus of a - b.
double max_abs_diff(const CMatrix &a, const CMatrix &b);
double frobenius_distance(const CMatrix &a, const CMatrix &b);
/// [a, b] = ab - ba.
CMatrix commutator(const CMatrix &a, const CMatrix &b);
/// {a, b} = ab + ba.
CMatrix anticommutator(const CMatrix &a, const CMatrix &b);

struct UnitarityCheck {
    bool unitary;
    double residual; // ||M^dagger M - I||_F
};

UnitarityCheck check_unitary(const CMatrix &m, double tol = Tolerances::unitarity);

/// ||H - H^dagger||_F.
double hermitian_residual(const CMatrix &h);

/// Eigenvalues with a unitary diagonalizer whose columns are eigenvectors.
struct Spectrum {
    std::vector<Complex> eigenvalues;
    CMatrix diagonalizer;
};

/// Real spectrum of a Hermitian matrix, eigenvalues ascending.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    CMatrix diagonalizer;
};

/// Cyclic complex Jacobi. Throws DomainError for non-Hermitian input.
HermitianSpectrum eig_hermitian(const CMatrix &h, double tol = Tolerances::hermiticity);

/// Spectrum of a unitary matrix through the complex Schur form. Eigenvalues
/// closer than Tolerances::eigen_cluster on the unit circle share a cluster
/// whose eigenvectors are re-orthonormalized in index order.
Spectrum eig_unitary(const CMatrix &m, double tol = Tolerances::unitarity);

/// exp(-i * scale * H) for Hermitian H.
CMatrix expm_hermitian(const CMatrix &h, double scale = 1.0,
                       double tol = Tolerances::hermiticity);

/// One integer 2*pi multiple per eigenvalue cluster, in cluster order.
struct BranchChoice {
    std::vector<long> integers;

    static BranchChoice principal(std::size_t clusters) {
        return BranchChoice{std::vector<long>(clusters, 0)};
    }
    std::size_t size() const noexcept { return integers.size(); }
    friend bool operator==(const BranchChoice &, const BranchChoice &) = default;
};

/// A group of (near-)degenerate eigenvalues of a unitary.
struct EigenCluster {
    Complex eigenvalue; // mean of the members
    /// -arg(eigenvalue) mapped to (-pi, pi]; eigenvalues within the cluster
    /// tolerance of -1 map to +pi.
    double principal_phase;
    std::vector<std::vector<Complex>> vectors; // orthonormal
};

/// Clusters of a unitary's spectrum ordered by ascending principal phase.
/// This is the order that BranchChoice integers refer to.
std::vector<EigenCluster> unitary_clusters(const CMatrix &u,
                                           double cluster_tol = Tolerances::eigen_cluster,
                                           double tol = Tolerances::unitarity);

/// Principal phase of a single unit-modulus number, see EigenCluster.
double principal_phase(Complex u, double cluster_tol = Tolerances::eigen_cluster);

/// Hermitian H with exp(-i H delta_t / hbar) = U. The energy of cluster k is
/// hbar * (principal_phase_k + 2 pi N_k) / delta_t.
CMatrix logm_unitary(const CMatrix &u, const BranchChoice &branch, double delta_t = 1.0,
                     double hbar = 1.0);

} // namespace gateforge

#endif // GATEFORGE_LINALG_HPP
