#pragma once

/**
 * @file
 * Generalized entropies of finite probability distributions, in nats.
 *
 * Orders alpha = 1 and alpha = infinity are closed-form limits. For
 * |alpha - 1| < 1e-6 the generic formulas are replaced by second-order
 * expansions in (1 - alpha), since the quotients lose all precision there.
 * Outcomes with p_j = 0 contribute nothing to any sum.
 */

#include <cstddef>
#include <string>
#include <string_view>

#include "sicmub/measurements.hpp"

namespace sicmub {

/// Entropic order alpha > 0, with +infinity allowed.
class EntropyOrder {
  public:
    /// Throws DomainError unless alpha > 0 (NaN rejected).
    explicit EntropyOrder(double alpha);
    static EntropyOrder infinity() { return EntropyOrder(kInf); }
    /// Accepts a decimal number or "inf".
    static EntropyOrder parse(std::string_view text);

    [[nodiscard]] double value() const noexcept { return alpha_; }
    [[nodiscard]] bool is_infinite() const noexcept;
    [[nodiscard]] bool is_shannon() const noexcept { return alpha_ == 1.0; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(EntropyOrder, EntropyOrder) = default;

  private:
    double alpha_;
};

/// Conjugate orders alpha = 1/(1-s), beta = 1/(1+s), s in [0, 1), so that
/// 1/alpha + 1/beta = 2.
class SymOrderPair {
  public:
    explicit SymOrderPair(double s);
    [[nodiscard]] double s() const noexcept { return s_; }
    [[nodiscard]] EntropyOrder alpha() const { return EntropyOrder(1.0 / (1.0 - s_)); }
    [[nodiscard]] EntropyOrder beta() const { return EntropyOrder(1.0 / (1.0 + s_)); }
    /// max{alpha, beta}
    [[nodiscard]] EntropyOrder mu() const { return alpha(); }

  private:
    double s_;
};

enum class EntropyKind { renyi, tsallis };

[[nodiscard]] std::string_view to_string(EntropyKind kind);
[[nodiscard]] EntropyKind parse_entropy_kind(std::string_view text);

/// Renyi entropy (1-alpha)^{-1} ln sum p^alpha; Shannon at 1, -ln max p at
/// infinity.
[[nodiscard]] double renyi(const ProbDist &p, EntropyOrder alpha);

/// Tsallis entropy (1-alpha)^{-1} (sum p^alpha - 1); Shannon at 1. The
/// infinite order gives the limit 0.
[[nodiscard]] double tsallis(const ProbDist &p, EntropyOrder alpha);

[[nodiscard]] double shannon(const ProbDist &p);

[[nodiscard]] double entropy(const ProbDist &p, EntropyOrder alpha,
                             EntropyKind kind);

/// ln_alpha(x) = (x^{1-alpha} - 1)/(1 - alpha); ln x at alpha = 1.
/// Throws DomainError for x <= 0.
[[nodiscard]] double alpha_log(double x, EntropyOrder alpha);

/// h_alpha(eta) = -eta^alpha ln_alpha(eta) - (1-eta)^alpha ln_alpha(1-eta).
[[nodiscard]] double binary_tsallis(double eta, EntropyOrder alpha);

/// Half-sum of the order-alpha and order-beta entropies of the pair.
[[nodiscard]] double symmetrized(const ProbDist &p, const SymOrderPair &orders,
                                 EntropyKind kind);

/// Index of coincidence sum p_j^2.
[[nodiscard]] double index_of_coincidence(const ProbDist &p);

/// Largest possible entry of an n-outcome distribution whose index of
/// coincidence is b2: (1/n)(1 + sqrt(n-1) sqrt(n b2 - 1)). Throws
/// DomainError unless 1/n <= b2 <= 1 (1e-12 slack, then clamped).
[[nodiscard]] double max_prob_bound(std::size_t n, double b2);

} // namespace sicmub
