#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "sicmub/bounds.hpp"

namespace sicmub {

/// Identifiers of the checks the driver knows how to run.
enum class PropositionId {
    mub_tsallis,    ///< P1-mub-tsallis
    mub_renyi,      ///< P2-mub-renyi
    mub_minentropy, ///< P3-mub-minent
    mub_symmetrized,///< P4-mub-sym
    sic_coincidence,///< P5-sic-ic (exact identity)
    sic_tsallis,    ///< P6-sic-tsallis
    sic_renyi,      ///< P7-sic-renyi
    sic_minentropy, ///< P8-sic-minent
    mu_pair,        ///< P9-mu-pair
    coincidence_sum,///< LWBM-sum
    max_element,    ///< APXA-max
    riesz,          ///< APXB-riesz
    entanglement_g, ///< ENT-G
    sic_simple,     ///< SIC-simple
};

[[nodiscard]] std::string_view to_string(PropositionId id);
/// Throws DomainError for an unknown label.
[[nodiscard]] PropositionId parse_proposition(std::string_view label);
[[nodiscard]] const std::vector<PropositionId> &all_propositions();

/// Which measurement family a proposition is stated for.
enum class MeasurementFamily { mub, sic, pair };
[[nodiscard]] MeasurementFamily family_of(PropositionId id);

/// Whether the proposition takes an entropic order / a kind split.
[[nodiscard]] bool uses_order(PropositionId id);
[[nodiscard]] bool uses_symmetric_orders(PropositionId id);
[[nodiscard]] bool uses_kind(PropositionId id);

/// Throws DomainError unless `alpha` lies in the proposition's order range.
/// For the symmetric-order propositions alpha is the larger order
/// mu = 1/(1-s) and must be finite and >= 1.
void validate_order(PropositionId id, EntropyOrder alpha);

struct PovmPair {
    RankOnePovm first;
    RankOnePovm second;
};

using MeasurementSet = std::variant<MubSet, SicPovm, PovmPair>;

struct BoundParams {
    std::optional<EntropyOrder> alpha;  ///< P1, P2, P6, P7, SIC-simple
    std::optional<SymOrderPair> orders; ///< P4, P9
    EntropyKind kind = EntropyKind::tsallis;
    double eta = 1.0;                   ///< P1, P6 inefficiency variant when < 1
    bool state_independent = false;
    std::size_t riesz_trials = 0;       ///< APXB: extra random inputs
    std::uint64_t riesz_seed = 0;
    double tolerance = 1e-10;
};

/// Evaluates one proposition on one state. The left side is the quantity
/// the proposition constrains: the basis average for MUB statements, the
/// single entropy for SIC statements, the two-measurement sum for pairs.
/// ENT-G expects a state on H (x) H together with the single-party SIC.
[[nodiscard]] BoundReport check_bound(const MeasurementSet &meas,
                                      const DensityMatrix &rho, PropositionId id,
                                      const BoundParams &params);

} // namespace sicmub
