#pragma once

/**
 * @file
 * JSON encodings of states, fiducial kets and MUB sets.
 *
 * Density matrix: {"dim": d, "re": [[...]], "im": [[...]]}, d rows of d.
 * Fiducial ket:   {"dim": d, "re": [...],   "im": [...]}.
 */

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sicmub/measurements.hpp"
#include "sicmub/states.hpp"

namespace sicmub {

[[nodiscard]] nlohmann::json to_json(const ComplexMatrix &m);
[[nodiscard]] nlohmann::json to_json(const DensityMatrix &rho);
[[nodiscard]] nlohmann::json to_json(const MubSet &mubs);

/// Throws DomainError on a malformed document, InvalidStateError if the
/// matrix is not a density operator.
[[nodiscard]] DensityMatrix density_matrix_from_json(const nlohmann::json &j);

struct LoadedFiducial {
    ComplexVector ket;  ///< unit norm
    double rescale = 1; ///< factor applied to reach unit norm
};

/// Throws DomainError on a malformed document or a zero vector.
[[nodiscard]] LoadedFiducial fiducial_from_json(const nlohmann::json &j);

/// File variants; IoError when the file cannot be opened or is not JSON.
[[nodiscard]] DensityMatrix load_density_matrix(const std::filesystem::path &p);
[[nodiscard]] LoadedFiducial load_fiducial(const std::filesystem::path &p);

} // namespace sicmub
