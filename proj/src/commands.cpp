#include "sicmub/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sicmub/errors.hpp"
#include "sicmub/io.hpp"

namespace sicmub {

namespace {

template <class F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUnsupported;
    }
}

double orthonormality_deviation(const MubSet &mubs) {
    double worst = 0.0;
    for (const auto &b : mubs.bases()) {
        const auto g = gram_matrix(b.vectors());
        worst = std::max(worst, max_abs_diff(g, ComplexMatrix::identity(g.rows())));
    }
    return worst;
}

} // namespace

int cmd_mub(std::size_t d, std::size_t count, std::ostream &out,
            std::ostream &err) {
    return guarded(err, [&] {
        const auto mubs = mub_construct(d, count);
        const double unbiased = mub_deviation(mubs.bases());
        const double ortho = orthonormality_deviation(mubs);
        const bool ok = unbiased <= 1e-10 && ortho <= 1e-10;
        auto j = to_json(mubs);
        j["verification"] = {{"unbiasedness_deviation", unbiased},
                             {"orthonormality_deviation", ortho},
                             {"tolerance", 1e-10},
                             {"passed", ok}};
        out << j.dump(2) << '\n';
        return ok ? kExitPass : kExitViolation;
    });
}

int cmd_verify(const CampaignConfig &config, const VerifyOutput &output,
               std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto rows = run_campaign(config);
        const auto summary = summarize(rows);

        std::ostringstream report;
        if (output.format == ReportFormat::csv) {
            write_csv(report, rows);
        } else {
            write_json(report, rows, summary);
        }
        std::ostream *log = &out;
        if (output.path) {
            std::ofstream file(*output.path, std::ios::binary);
            if (!file || !(file << report.str()) || !file.flush()) {
                throw IoError("cannot write " + output.path->string());
            }
        } else {
            out << report.str();
            log = &err;
        }
        *log << "checks=" << summary.checks << " failures=" << summary.failures
             << " min_margin=" << format_number(summary.min_margin)
             << " saturated=" << summary.saturated << '\n';
        return summary.failures == 0 ? kExitPass : kExitViolation;
    });
}

int cmd_coincidence(std::size_t d, const StateSource &source,
                    const std::optional<ComplexVector> &fiducial,
                    std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const SicPovm sic = (fiducial && fiducial->dim() == d)
                                ? sic_from_fiducial(*fiducial)
                                : builtin_sic(d);
        RandomStream rng(source.seed, d);
        const DensityMatrix rho = [&] {
            if (source.name == "mixed") {
                return DensityMatrix::maximally_mixed(d);
            }
            if (source.name == "random-pure") {
                return random_pure(d, rng);
            }
            if (source.name == "random-mixed") {
                return random_mixed(d, d, rng);
            }
            auto r = load_density_matrix(source.name);
            if (r.dim() != d) {
                throw DimensionError("state file has dimension " +
                                     std::to_string(r.dim()) + ", expected " +
                                     std::to_string(d));
            }
            return r;
        }();
        const auto p = probabilities(sic, rho);
        const double dd = static_cast<double>(d);
        const double lhs = index_of_coincidence(p);
        const double rhs = (purity(rho) + 1.0) / (dd * (dd + 1.0));
        const double residual = std::abs(lhs - rhs);
        out << "lhs=" << format_number(lhs) << " rhs=" << format_number(rhs)
            << " residual=" << format_number(residual) << '\n';
        return residual <= 1e-10 ? kExitPass : kExitViolation;
    });
}

} // namespace sicmub
