#pragma once

/**
 * @file
 * Entropic lower bounds for MUB sets, single SIC-POVMs and pairs of
 * rank-one POVMs, plus the report type used to compare a computed entropy
 * against its bound.
 *
 * Bound functions take the state only through its purity tr(rho^2), which
 * must lie in [1/d, 1]; values within 1e-12 outside the interval are
 * clamped. With state_independent = true the purity is replaced by 1.
 */

#include <cstddef>
#include <string>

#include "sicmub/entropy.hpp"
#include "sicmub/measurements.hpp"
#include "sicmub/random.hpp"
#include "sicmub/states.hpp"

namespace sicmub {

/// How lhs and rhs of a report are meant to relate.
enum class Relation {
    lower_bound, ///< lhs >= rhs, margin = lhs - rhs
    upper_bound, ///< lhs <= rhs, margin = rhs - lhs
    equality,    ///< lhs == rhs, margin = lhs - rhs
};

/// Outcome of comparing one computed quantity with its bound.
///
/// `margin` is the signed slack in the direction of `relation`, so every
/// kind of check passes when margin >= -tolerance (equalities additionally
/// need margin <= tolerance). `saturated` means |lhs - rhs| <= tolerance.
struct BoundReport {
    std::string label;
    Relation relation = Relation::lower_bound;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    bool saturated = false;

    [[nodiscard]] bool passed() const;
};

[[nodiscard]] BoundReport make_report(std::string label, Relation relation,
                                      double lhs, double rhs, double tolerance);

// --- MUB sets -------------------------------------------------------------

/// ln_alpha(M d / (purity d + M - 1)), alpha in (0, 2].
[[nodiscard]] double mub_tsallis_bound(std::size_t d, std::size_t count,
                                       EntropyOrder alpha, double purity,
                                       bool state_independent = false);

/// eta^alpha * mub_tsallis_bound + h_alpha(eta).
[[nodiscard]] double mub_tsallis_bound_inefficiency(std::size_t d,
                                                    std::size_t count,
                                                    EntropyOrder alpha,
                                                    double purity, double eta);

/// alpha/(2(alpha-1)) ln(M d / (purity d + M - 1)), alpha in [2, inf];
/// the infinite order uses the factor 1/2.
[[nodiscard]] double mub_renyi_bound(std::size_t d, std::size_t count,
                                     EntropyOrder alpha, double purity,
                                     bool state_independent = false);

/// Min-entropy bound ln d - ln(1 + M^{-1/2} sqrt(d-1) sqrt(purity d - 1));
/// state-independent form ln(sqrt(M) d / (d + sqrt(M) - 1)).
[[nodiscard]] double mub_minentropy_bound(std::size_t d, std::size_t count,
                                          double purity,
                                          bool state_independent = false);

/// g_d(x) = (1 + sqrt(d-1) sqrt(x d - 1))/d for x in [1/d, 1]; the bound
/// on the largest outcome probability of a basis with coincidence x.
[[nodiscard]] double max_prob_envelope(std::size_t d, double x);

/// Sum of basis coincidence indices against purity + (M-1)/d; passes when
/// the sum does not exceed the right side by more than 1e-12.
[[nodiscard]] BoundReport coincidence_sum_check(const MubSet &mubs,
                                                const DensityMatrix &rho);

/// Tsallis: (1/2) ln_mu(d) with mu = 1/(1-s). Renyi: (1/2) ln d.
[[nodiscard]] double mub_symmetrized_bound(std::size_t d,
                                           const SymOrderPair &orders,
                                           EntropyKind kind);

// --- single SIC-POVM ------------------------------------------------------

/// ln_alpha(d(d+1)/(purity + 1)), alpha in (0, 2].
[[nodiscard]] double sic_tsallis_bound(std::size_t d, EntropyOrder alpha,
                                       double purity,
                                       bool state_independent = false);

[[nodiscard]] double sic_tsallis_bound_inefficiency(std::size_t d,
                                                    EntropyOrder alpha,
                                                    double purity, double eta);

/// alpha/(2(alpha-1)) ln(d(d+1)/(purity + 1)), alpha in [2, inf]. The
/// formula depends on the purity even though it is sometimes called
/// state-independent; pass purity = 1 for the uniform form.
[[nodiscard]] double sic_renyi_bound(std::size_t d, EntropyOrder alpha,
                                     double purity);

/// 2 ln d - ln(1 + sqrt(d-1) sqrt(purity d - 1)).
[[nodiscard]] double sic_minentropy_bound(std::size_t d, double purity);

struct SimpleBoundReports {
    BoundReport entropy;   ///< entropy >= ln_alpha(1/max p)  (or -ln max p)
    BoundReport dimension; ///< ln_alpha(1/max p) >= ln_alpha(d)  (or ln d)
};

/// Bounds from the largest outcome probability of SIC statistics. Throws
/// PreconditionError if max p > 1/d + 1e-12.
[[nodiscard]] SimpleBoundReports simple_bounds(const ProbDist &p, std::size_t d,
                                               EntropyOrder alpha,
                                               EntropyKind kind,
                                               double tolerance = 1e-10);

// --- pairs of rank-one POVMs ---------------------------------------------

/// Outcomes with probability at or below this are excluded from g and from
/// the Riesz transformation.
inline constexpr double kZeroProbability = 1e-14;

/// g(M, N | rho): max over supported pairs of
/// |<m_i|n_j><n_j|rho|m_i>| / sqrt(<m_i|rho|m_i> <n_j|rho|n_j>).
[[nodiscard]] double mu_g_factor(const RankOnePovm &m, const RankOnePovm &n,
                                 const DensityMatrix &rho);

/// max_ij |<m_i|n_j>|; for SIC vectors m_i = phi_i/sqrt(d) this carries
/// the 1/d prefactor.
[[nodiscard]] double mu_overlap_bound(const RankOnePovm &m,
                                      const RankOnePovm &n);

struct MuPairReports {
    double g = 0.0;
    double f_bar = 0.0;
    BoundReport tsallis;       ///< H_a(M) + H_b(N) >= ln_mu(g^-2)
    BoundReport renyi;         ///< R_a(M) + R_b(N) >= -2 ln g
    BoundReport tsallis_fbar;  ///< same with f_bar in place of g
    BoundReport renyi_fbar;
};

/// Requires 1/alpha + 1/beta = 2 within 1e-12 (DomainError otherwise).
[[nodiscard]] MuPairReports mu_pair_bounds(const RankOnePovm &m,
                                           const RankOnePovm &n,
                                           const DensityMatrix &rho,
                                           EntropyOrder alpha, EntropyOrder beta,
                                           double tolerance = 1e-10);

/// t_ij = <m_i|n_j><n_j|rho|m_i> / sqrt(<m_i|rho|m_i> <n_j|rho|n_j>), with
/// rows and columns of unsupported outcomes set to zero.
[[nodiscard]] ComplexMatrix riesz_transform(const RankOnePovm &m,
                                            const RankOnePovm &n,
                                            const DensityMatrix &rho);

/// Checks ||t u||_2 <= ||u||_2 for `u` and then `trials` random complex
/// inputs drawn from rng. Returns the report of the worst case
/// (lhs = ||t u||, rhs = ||u||), tolerance 1e-12.
[[nodiscard]] BoundReport riesz_precondition_check(const RankOnePovm &m,
                                                   const RankOnePovm &n,
                                                   const DensityMatrix &rho,
                                                   const ComplexVector &u,
                                                   std::size_t trials,
                                                   RandomStream &rng);

} // namespace sicmub
