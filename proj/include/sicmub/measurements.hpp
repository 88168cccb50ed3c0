#pragma once

/**
 * @file
 * Measurement descriptions (orthonormal bases, MUB sets, POVMs, SIC-POVMs),
 * their outcome statistics, and the detector-inefficiency distortion.
 *
 * Every type here is produced by a validating factory; an object that exists
 * has passed its structural check at the tolerance documented on the
 * factory.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "sicmub/linalg.hpp"
#include "sicmub/states.hpp"

namespace sicmub {

/// Finite probability vector. Entries in (-1e-14, 0) are clamped to zero;
/// anything more negative is rejected, as is a sum off by more than 1e-12.
class ProbDist {
  public:
    static ProbDist from_values(std::vector<double> p, double sum_tol = 1e-12,
                                double negative_tol = 1e-14);

    [[nodiscard]] std::span<const double> values() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return p_[i]; }
    [[nodiscard]] double max() const;

  private:
    explicit ProbDist(std::vector<double> p) : p_(std::move(p)) {}
    std::vector<double> p_;
};

class OrthonormalBasis {
  public:
    /// Throws ConstructionError if the Gram matrix is off identity by > tol.
    static OrthonormalBasis from_vectors(std::vector<ComplexVector> vectors,
                                         double tol = 1e-10);
    /// Columns of a unitary.
    static OrthonormalBasis from_unitary(const ComplexMatrix &u,
                                         double tol = 1e-10);
    static OrthonormalBasis computational(std::size_t d);

    [[nodiscard]] std::span<const ComplexVector> vectors() const noexcept {
        return vectors_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return vectors_.size(); }

  private:
    explicit OrthonormalBasis(std::vector<ComplexVector> v)
        : vectors_(std::move(v)) {}
    std::vector<ComplexVector> vectors_;
};

class MubSet {
  public:
    /// Throws ConstructionError if any cross-basis |<b|b'>|^2 differs from
    /// 1/d by more than tol.
    static MubSet from_bases(std::vector<OrthonormalBasis> bases,
                             double tol = 1e-10);

    [[nodiscard]] std::span<const OrthonormalBasis> bases() const noexcept {
        return bases_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t count() const noexcept { return bases_.size(); }

  private:
    MubSet(std::vector<OrthonormalBasis> b, std::size_t d)
        : bases_(std::move(b)), dim_(d) {}
    std::vector<OrthonormalBasis> bases_;
    std::size_t dim_;
};

/// max over distinct bases and all j, k of | |<b_j|b'_k>|^2 - 1/d |.
[[nodiscard]] double mub_deviation(std::span<const OrthonormalBasis> bases);

class Povm {
  public:
    /// Throws ConstructionError unless every element is PSD (eigenvalues
    /// >= -tol) and the elements sum to the identity within tol.
    static Povm from_elements(std::vector<ComplexMatrix> elements,
                              double tol = 1e-10);

    [[nodiscard]] std::span<const ComplexMatrix> elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
        return elements_.front().rows();
    }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }

  private:
    explicit Povm(std::vector<ComplexMatrix> e) : elements_(std::move(e)) {}
    std::vector<ComplexMatrix> elements_;
};

/// SIC-POVM {(1/d)|phi_j><phi_j|}, j = 0..d^2-1.
class SicPovm {
  public:
    /// Checks |<phi_j|phi_k>|^2 = 1/(d+1) for j != k and completeness,
    /// both within tol. Throws NotASicError with the worst deviation.
    static SicPovm from_kets(std::vector<ComplexVector> kets, double tol = 1e-8);

    [[nodiscard]] std::span<const ComplexVector> kets() const noexcept {
        return kets_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return kets_.size(); }
    [[nodiscard]] ComplexMatrix element(std::size_t j) const;
    [[nodiscard]] Povm as_povm() const;

  private:
    SicPovm(std::vector<ComplexVector> k, std::size_t d)
        : kets_(std::move(k)), dim_(d) {}
    std::vector<ComplexVector> kets_;
    std::size_t dim_;
};

/// POVM with elements |m_i><m_i| given by (sub-normalized) vectors m_i.
class RankOnePovm {
  public:
    /// Extracts m_i from each element; throws PreconditionError if an
    /// element has a second eigenvalue above tol.
    static RankOnePovm from_povm(const Povm &povm, double tol = 1e-10);
    static RankOnePovm from_basis(const OrthonormalBasis &basis);
    /// m_j = phi_j / sqrt(d).
    static RankOnePovm from_sic(const SicPovm &sic);
    /// Checks completeness sum |m_i><m_i| = I within tol.
    static RankOnePovm from_vectors(std::vector<ComplexVector> vectors,
                                    double tol = 1e-10);

    [[nodiscard]] std::span<const ComplexVector> vectors() const noexcept {
        return vectors_;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
        return vectors_.front().dim();
    }
    [[nodiscard]] std::size_t size() const noexcept { return vectors_.size(); }
    [[nodiscard]] Povm as_povm() const;

  private:
    explicit RankOnePovm(std::vector<ComplexVector> v) : vectors_(std::move(v)) {}
    std::vector<ComplexVector> vectors_;
};

[[nodiscard]] ProbDist probabilities(const OrthonormalBasis &basis,
                                     const DensityMatrix &rho);
[[nodiscard]] ProbDist probabilities(const Povm &povm, const DensityMatrix &rho);
[[nodiscard]] ProbDist probabilities(const SicPovm &sic,
                                     const DensityMatrix &rho);
[[nodiscard]] ProbDist probabilities(const RankOnePovm &povm,
                                     const DensityMatrix &rho);

[[nodiscard]] bool is_prime(std::size_t n);

/// First `count` bases of the standard complete MUB family: the Pauli
/// eigenbases (Z, X, Y) for d = 2; for odd prime d the computational basis
/// followed by the quadratic-phase bases
///   <k|b_j^(m)> = d^{-1/2} omega^{m k^2 + j k},  m = 0..d-1.
/// Throws UnsupportedDimensionError for other d, DomainError unless
/// 2 <= count <= d + 1.
[[nodiscard]] MubSet mub_construct(std::size_t d, std::size_t count);

/// Cyclic shift X|k> = |k+1 mod d> and clock Z|k> = omega^k |k>.
[[nodiscard]] ComplexMatrix weyl_shift(std::size_t d);
[[nodiscard]] ComplexMatrix weyl_clock(std::size_t d);

/// X^a Z^b |fiducial>, stored at index a * d + b.
[[nodiscard]] std::vector<ComplexVector>
weyl_heisenberg_orbit(const ComplexVector &fiducial);

/// Orbit of a unit fiducial, verified as a SIC within tol.
[[nodiscard]] SicPovm sic_from_fiducial(const ComplexVector &fiducial,
                                        double tol = 1e-8);

/// Embedded fiducials: d = 2 the ket with Bloch vector (1,1,1)/sqrt(3),
/// d = 3 the ket (0, 1, -1)/sqrt(2).
[[nodiscard]] bool has_builtin_fiducial(std::size_t d);
[[nodiscard]] ComplexVector builtin_fiducial(std::size_t d);
[[nodiscard]] SicPovm builtin_sic(std::size_t d);

struct SicConsequencesReport {
    Complex double_sum;              ///< (1/d^2) sum_ij <i|A|j><j|i>
    double trace_deviation;          ///< |double_sum - tr A|
    double reconstruction_deviation; ///< max |(1/d) sum_j |j><j|psi> - psi|
    bool passed;
};

/// Checks the two completeness consequences (trace and reconstruction
/// identities) with pass threshold tol.
[[nodiscard]] SicConsequencesReport
sic_consequences_check(const SicPovm &sic, const ComplexMatrix &a,
                       const ComplexVector &psi, double tol = 1e-10);

/// The d^2 orthonormal vectors in H (x) H built from the SIC kets:
///   Phi   = d^{-3/2} sum_j |phi_j>|phi_j*>
///   Psi_k = sqrt(d+1) d^{-3/2} sum_j omega^{k j} |phi_j>|phi_j*>,
/// k = 1..d^2-1, omega = exp(2 pi i / d^2), j in storage order from 0.
/// Index 0 of the result is Phi. Throws ConstructionError if the Gram
/// matrix deviates from identity by more than 1e-8.
[[nodiscard]] std::vector<ComplexVector> sic_design_basis(const SicPovm &sic);

/// Appends the no-click outcome: (eta p_1, ..., eta p_n, 1 - eta).
[[nodiscard]] ProbDist distort(const ProbDist &p, double eta);

} // namespace sicmub
