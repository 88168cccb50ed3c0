#pragma once

#include <cstddef>
#include <vector>

#include "sicmub/bounds.hpp"
#include "sicmub/measurements.hpp"
#include "sicmub/states.hpp"

namespace sicmub {

/// Product POVM on H (x) H with elements (1/d^2)|phi_i phi_j*><phi_i phi_j*|.
/// Outcome (i, j) is stored at flat index i * d^2 + j.
class BipartitePovm {
  public:
    [[nodiscard]] std::size_t party_dim() const noexcept { return d_; }
    [[nodiscard]] std::size_t outcomes_per_party() const noexcept { return d_ * d_; }
    /// |phi_i> (x) |phi_j*>
    [[nodiscard]] const ComplexVector &ket(std::size_t i, std::size_t j) const {
        return kets_[i * d_ * d_ + j];
    }
    [[nodiscard]] double weight() const noexcept {
        return 1.0 / static_cast<double>(d_ * d_);
    }
    [[nodiscard]] ComplexMatrix element(std::size_t i, std::size_t j) const;

  private:
    friend BipartitePovm product_sic_povm(const SicPovm &sic);
    BipartitePovm(std::size_t d, std::vector<ComplexVector> kets)
        : d_(d), kets_(std::move(kets)) {}
    std::size_t d_;
    std::vector<ComplexVector> kets_;
};

/// SIC kets on party A, conjugated kets on party B. Throws
/// ConstructionError if completeness is off by more than 1e-8.
[[nodiscard]] BipartitePovm product_sic_povm(const SicPovm &sic);

/// Joint distribution P(i, j) over all d^4 outcomes.
[[nodiscard]] ProbDist probabilities(const BipartitePovm &povm,
                                     const DensityMatrix &rho);

/// |Phi+><Phi+|, Phi+ = d^{-1/2} sum_n |n>|n>.
[[nodiscard]] DensityMatrix maximally_entangled(std::size_t d);

/// G = sum_j P(j, j).
[[nodiscard]] double correlation_G(const BipartitePovm &povm,
                                   const DensityMatrix &rho);

/// sqrt(purity_A + 1) sqrt(purity_B + 1) / (d(d+1)).
[[nodiscard]] double separable_bound(std::size_t d, double purity_a,
                                     double purity_b);

/// 2/(d(d+1)), the purity-free bound obeyed by every separable state.
[[nodiscard]] double universal_separable_bound(std::size_t d);

struct EntanglementVerdict {
    /// G exceeds the separable bound by more than 1e-12. A sufficient
    /// witness only: entangled states can also stay below the bound.
    bool entangled = false;
    /// lhs = G, rhs = 2/(d(d+1)), upper-bound relation.
    BoundReport report;
};

[[nodiscard]] EntanglementVerdict detect_entanglement(const SicPovm &sic,
                                                      const DensityMatrix &rho);

} // namespace sicmub
