#pragma once

/**
 * @file
 * Command implementations behind the CLI. Each returns the process exit
 * code: 0 pass, 1 a bound or identity violated, 2 unsupported or invalid
 * input, 3 file I/O failure.
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "sicmub/campaign.hpp"

namespace sicmub {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitIo = 3;

/// Builds M MUBs in dimension d and prints them as JSON with the worst
/// unbiasedness and orthonormality deviations.
int cmd_mub(std::size_t d, std::size_t count, std::ostream &out,
            std::ostream &err);

enum class ReportFormat { csv, json };

struct VerifyOutput {
    std::optional<std::filesystem::path> path; ///< stdout when unset
    ReportFormat format = ReportFormat::csv;
};

/// Runs the campaign, writes the report and a one-line summary. The summary
/// goes to `out` when the report is written to a file and to `err` when the
/// report itself occupies `out`.
int cmd_verify(const CampaignConfig &config, const VerifyOutput &output,
               std::ostream &out, std::ostream &err);

/// "mixed" (I/d), "random-pure", "random-mixed", or a path to a density
/// matrix JSON file.
struct StateSource {
    std::string name = "mixed";
    std::uint64_t seed = 0;
};

/// Prints the SIC index of coincidence, the purity formula and the
/// residual; exit 0 when the residual is at most 1e-10.
int cmd_coincidence(std::size_t d, const StateSource &source,
                    const std::optional<ComplexVector> &fiducial,
                    std::ostream &out, std::ostream &err);

} // namespace sicmub
