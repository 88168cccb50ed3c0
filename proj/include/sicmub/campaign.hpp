#pragma once

/**
 * @file
 * Monte-Carlo verification campaigns: every requested proposition is
 * checked on fresh random states for each dimension, and each check becomes
 * one report row.
 *
 * The state for (dim, sample) is drawn from RandomStream(seed, dim) split by
 * sample, so it is shared by all propositions and does not depend on thread
 * scheduling. Rows are ordered by (dim, prop, alpha, kind, sample).
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sicmub/check_bound.hpp"

namespace sicmub {

struct CampaignConfig {
    std::vector<std::size_t> dims;
    std::vector<PropositionId> props;
    /// Orders applied to every order-dependent proposition. Empty means the
    /// per-proposition defaults. For P4 and P9 the value is the larger
    /// order mu, and s = 1 - 1/mu.
    std::vector<EntropyOrder> alphas;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    /// Detector efficiency for P1 and P6; unset means ideal detectors.
    std::optional<double> eta;
    double tolerance = 1e-10;
    /// Number of MUBs; unset means the complete set d + 1.
    std::optional<std::size_t> count;
    /// Replaces the builtin fiducial in its own dimension.
    std::optional<ComplexVector> fiducial;
};

/// Throws DomainError for an invalid config (samples < 1, empty lists,
/// eta outside [0, 1], negative tolerance, an order outside a proposition's
/// range). Throws UnsupportedDimensionError when a requested proposition
/// has no measurement available in a requested dimension.
void validate(const CampaignConfig &config);

[[nodiscard]] std::vector<EntropyOrder> default_orders(PropositionId id);

struct CampaignRow {
    std::string prop;
    std::size_t dim = 0;
    std::size_t measurements = 0;
    std::optional<EntropyOrder> alpha;
    std::optional<double> eta;
    std::uint64_t seed = 0;
    std::size_t sample = 0;
    double purity = 0.0;
    BoundReport report;
};

struct CampaignSummary {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t saturated = 0;
    double min_margin = kInf;
};

[[nodiscard]] CampaignSummary summarize(const std::vector<CampaignRow> &rows);

/// OpenMP-parallel over all (check, sample) pairs.
[[nodiscard]] std::vector<CampaignRow> run_campaign(const CampaignConfig &config);
/// Single-threaded reference; returns the same rows as run_campaign.
[[nodiscard]] std::vector<CampaignRow>
run_campaign_serial(const CampaignConfig &config);

/// Shortest round-trip decimal; "inf", "-inf", "nan" for non-finite values.
[[nodiscard]] std::string format_number(double x);

inline constexpr const char *kCsvHeader =
    "prop,dim,M,alpha,eta,seed,sample,purity,lhs,rhs,margin,saturated";

void write_csv(std::ostream &out, const std::vector<CampaignRow> &rows);
void write_json(std::ostream &out, const std::vector<CampaignRow> &rows,
                const CampaignSummary &summary);

} // namespace sicmub
