#pragma once

#include <array>
#include <cstdint>

#include "sicmub/linalg.hpp"
#include "sicmub/random.hpp"

namespace sicmub {

struct StateTolerances {
    double hermiticity = 1e-12;
    double trace = 1e-12;
    double min_eigenvalue = -1e-10;
};

/// Hermitian, positive semidefinite, unit-trace operator.
///
/// Instances only come out of validating factories, so every DensityMatrix
/// in circulation satisfies the invariants at the tolerances above.
class DensityMatrix {
  public:
    /// Validates and wraps `m`. Throws InvalidStateError on failure.
    static DensityMatrix from_matrix(ComplexMatrix m,
                                     const StateTolerances &tol = {});
    /// |psi><psi| after normalizing psi.
    static DensityMatrix pure(const ComplexVector &psi);
    static DensityMatrix maximally_mixed(std::size_t d);

    [[nodiscard]] const ComplexMatrix &mat() const noexcept { return mat_; }
    [[nodiscard]] std::size_t dim() const noexcept { return mat_.rows(); }

  private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// tr(rho^2), in [1/d, 1].
[[nodiscard]] double purity(const DensityMatrix &rho);

/// rho_A (x) rho_B
[[nodiscard]] DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Partial traces of an operator on C^dA (x) C^dB.
[[nodiscard]] ComplexMatrix partial_trace_b(const ComplexMatrix &m,
                                            std::size_t dim_a,
                                            std::size_t dim_b);
[[nodiscard]] ComplexMatrix partial_trace_a(const ComplexMatrix &m,
                                            std::size_t dim_a,
                                            std::size_t dim_b);

struct BlochVector {
    std::array<double, 3> s{};
    [[nodiscard]] double length() const;
};

/// Pauli matrices sigma_x, sigma_y, sigma_z.
[[nodiscard]] const std::array<ComplexMatrix, 3> &pauli_matrices();

/// (I + s.sigma)/2. Throws DomainError if |s| > 1 + 1e-12.
[[nodiscard]] DensityMatrix from_bloch(const BlochVector &s);

/// s_k = tr(rho sigma_k). Requires a qubit state.
[[nodiscard]] BlochVector bloch_vector(const DensityMatrix &rho);

/// Haar-random pure state from a normalized complex Gaussian column.
[[nodiscard]] DensityMatrix random_pure(std::size_t d, RandomStream &rng);
[[nodiscard]] DensityMatrix random_pure(std::size_t d, std::uint64_t seed,
                                        std::uint64_t stream = 0);

/// G G^dagger / tr(G G^dagger) with G a d x rank Ginibre matrix.
[[nodiscard]] DensityMatrix random_mixed(std::size_t d, std::size_t rank,
                                         RandomStream &rng);
[[nodiscard]] DensityMatrix random_mixed(std::size_t d, std::size_t rank,
                                         std::uint64_t seed,
                                         std::uint64_t stream = 0);

/// random_mixed with a rank drawn uniformly from 1..d.
[[nodiscard]] DensityMatrix random_state(std::size_t d, RandomStream &rng);

/// Haar-random unitary: Gram-Schmidt of a Ginibre matrix with the
/// phase correction that makes the distribution exactly Haar.
[[nodiscard]] ComplexMatrix random_unitary(std::size_t d, RandomStream &rng);

/// U rho U^dagger
[[nodiscard]] DensityMatrix conjugate_by(const ComplexMatrix &u,
                                         const DensityMatrix &rho);

} // namespace sicmub
