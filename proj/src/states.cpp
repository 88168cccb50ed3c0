#include "sicmub/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sicmub/errors.hpp"

namespace sicmub {

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m,
                                         const StateTolerances &tol) {
    if (!m.is_square() || m.rows() == 0) {
        throw InvalidStateError("density matrix must be square and non-empty");
    }
    const double herm = hermiticity_defect(m);
    if (herm > tol.hermiticity) {
        throw InvalidStateError("density matrix is not Hermitian (defect " +
                                std::to_string(herm) + ")");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol.trace) {
        throw InvalidStateError("density matrix trace is " +
                                std::to_string(tr.real()) + ", expected 1");
    }
    const auto ev = hermitian_eigenvalues(m);
    if (ev.front() < tol.min_eigenvalue) {
        throw InvalidStateError("density matrix has negative eigenvalue " +
                                std::to_string(ev.front()));
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const ComplexVector &psi) {
    const auto unit = psi.normalized();
    return DensityMatrix(ComplexMatrix::projector(unit));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    if (d == 0) {
        throw DomainError("maximally_mixed: dimension must be positive");
    }
    return DensityMatrix((1.0 / static_cast<double>(d)) *
                         ComplexMatrix::identity(d));
}

double purity(const DensityMatrix &rho) {
    // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    return hs_inner(rho.mat(), rho.mat()).real();
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix::from_matrix(kron(a.mat(), b.mat()));
}

ComplexMatrix partial_trace_b(const ComplexMatrix &m, std::size_t dim_a,
                              std::size_t dim_b) {
    if (m.rows() != dim_a * dim_b || !m.is_square()) {
        throw DimensionError("partial_trace_b: shape mismatch");
    }
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_a; ++j) {
            for (std::size_t k = 0; k < dim_b; ++k) {
                out(i, j) += m(i * dim_b + k, j * dim_b + k);
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix &m, std::size_t dim_a,
                              std::size_t dim_b) {
    if (m.rows() != dim_a * dim_b || !m.is_square()) {
        throw DimensionError("partial_trace_a: shape mismatch");
    }
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t i = 0; i < dim_b; ++i) {
        for (std::size_t j = 0; j < dim_b; ++j) {
            for (std::size_t k = 0; k < dim_a; ++k) {
                out(i, j) += m(k * dim_b + i, k * dim_b + j);
            }
        }
    }
    return out;
}

double BlochVector::length() const {
    return std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
}

const std::array<ComplexMatrix, 3> &pauli_matrices() {
    static const std::array<ComplexMatrix, 3> paulis = {
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return paulis;
}

DensityMatrix from_bloch(const BlochVector &s) {
    if (s.length() > 1.0 + 1e-12) {
        throw DomainError("Bloch vector longer than 1: " +
                          std::to_string(s.length()));
    }
    ComplexMatrix m = ComplexMatrix::identity(2);
    const auto &p = pauli_matrices();
    for (std::size_t k = 0; k < 3; ++k) {
        m += s.s[k] * p[k];
    }
    m *= 0.5;
    return DensityMatrix::from_matrix(std::move(m));
}

BlochVector bloch_vector(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw DimensionError("bloch_vector: qubit state required");
    }
    BlochVector out;
    const auto &p = pauli_matrices();
    for (std::size_t k = 0; k < 3; ++k) {
        out.s[k] = (rho.mat() * p[k]).trace().real();
    }
    return out;
}

DensityMatrix random_pure(std::size_t d, RandomStream &rng) {
    if (d < 2) {
        throw DomainError("random_pure: dimension must be >= 2");
    }
    ComplexVector psi(d);
    for (std::size_t i = 0; i < d; ++i) {
        psi[i] = rng.complex_normal();
    }
    return DensityMatrix::pure(psi);
}

DensityMatrix random_pure(std::size_t d, std::uint64_t seed,
                          std::uint64_t stream) {
    RandomStream rng(seed, stream);
    return random_pure(d, rng);
}

DensityMatrix random_mixed(std::size_t d, std::size_t rank, RandomStream &rng) {
    if (rank < 1 || rank > d) {
        throw DomainError("random_mixed: rank " + std::to_string(rank) +
                          " outside [1, " + std::to_string(d) + "]");
    }
    ComplexMatrix g(d, rank);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            g(i, j) = rng.complex_normal();
        }
    }
    ComplexMatrix m = g * g.adjoint();
    // Exact hermitization; the product is Hermitian only up to rounding.
    m = 0.5 * (m + m.adjoint());
    m *= 1.0 / m.trace().real();
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix random_mixed(std::size_t d, std::size_t rank, std::uint64_t seed,
                           std::uint64_t stream) {
    RandomStream rng(seed, stream);
    return random_mixed(d, rank, rng);
}

DensityMatrix random_state(std::size_t d, RandomStream &rng) {
    const auto rank = static_cast<std::size_t>(rng.uniform_int(1, d));
    return random_mixed(d, rank, rng);
}

ComplexMatrix random_unitary(std::size_t d, RandomStream &rng) {
    // Modified Gram-Schmidt leaves R with a positive diagonal, which is the
    // phase convention under which QR of a Ginibre matrix is Haar.
    std::vector<ComplexVector> cols;
    cols.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        ComplexVector v(d);
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = rng.complex_normal();
        }
        for (const auto &q : cols) {
            v -= inner(q, v) * q;
        }
        cols.push_back(v.normalized());
    }
    ComplexMatrix u(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            u(i, j) = cols[j][i];
        }
    }
    return u;
}

DensityMatrix conjugate_by(const ComplexMatrix &u, const DensityMatrix &rho) {
    ComplexMatrix m = u * rho.mat() * u.adjoint();
    m = 0.5 * (m + m.adjoint());
    return DensityMatrix::from_matrix(std::move(m));
}

} // namespace sicmub
