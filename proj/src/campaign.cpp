#include "sicmub/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <memory>

#include <json.hpp>

#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

// Seed of the fixed unitary that rotates the builtin SIC into the second
// member of the POVM pair. Independent of the campaign seed on purpose.
constexpr std::uint64_t kPairRotationSeed = 0x51c0de;

struct DimSetup {
    std::size_t dim = 0;
    std::unique_ptr<MeasurementSet> mub;
    std::unique_ptr<MeasurementSet> sic;
    std::unique_ptr<MeasurementSet> pair;
    bool needs_product = false;
};

struct Cell {
    std::size_t dim_index;
    PropositionId id;
    BoundParams params;
    std::optional<EntropyOrder> alpha;
    std::optional<double> eta;
    std::size_t measurements;
};

struct SampleStates {
    std::optional<DensityMatrix> single;
    std::optional<DensityMatrix> product;
    std::uint64_t riesz_seed = 0;
};

std::optional<SicPovm> try_sic(const CampaignConfig &c, std::size_t d) {
    if (c.fiducial && c.fiducial->dim() == d) {
        return sic_from_fiducial(*c.fiducial);
    }
    if (has_builtin_fiducial(d)) {
        return builtin_sic(d);
    }
    return std::nullopt;
}

SicPovm rotated(const SicPovm &sic) {
    RandomStream rng(kPairRotationSeed, sic.dim());
    const auto u = random_unitary(sic.dim(), rng);
    std::vector<ComplexVector> kets;
    kets.reserve(sic.size());
    for (const auto &k : sic.kets()) {
        kets.push_back(u * k);
    }
    return SicPovm::from_kets(std::move(kets));
}

DimSetup setup_dim(const CampaignConfig &c, std::size_t d) {
    DimSetup s;
    s.dim = d;
    bool want_mub = false;
    bool want_sic = false;
    bool want_pair = false;
    for (const auto id : c.props) {
        switch (family_of(id)) {
        case MeasurementFamily::mub: want_mub = true; break;
        case MeasurementFamily::pair: want_pair = true; break;
        case MeasurementFamily::sic: want_sic = true; break;
        }
        s.needs_product = s.needs_product || id == PropositionId::entanglement_g;
    }
    if (want_mub) {
        s.mub = std::make_unique<MeasurementSet>(
            mub_construct(d, c.count.value_or(d + 1)));
    }
    auto sic = (want_sic || want_pair) ? try_sic(c, d) : std::nullopt;
    if (want_sic) {
        if (!sic) {
            throw UnsupportedDimensionError("unsupported dimension " +
                                            std::to_string(d) +
                                            ": no SIC fiducial available");
        }
        s.sic = std::make_unique<MeasurementSet>(*sic);
    }
    if (want_pair) {
        if (sic) {
            s.pair = std::make_unique<MeasurementSet>(
                PovmPair{RankOnePovm::from_sic(*sic), RankOnePovm::from_sic(rotated(*sic))});
        } else {
            const auto mubs = mub_construct(d, 2);
            s.pair = std::make_unique<MeasurementSet>(
                PovmPair{RankOnePovm::from_basis(mubs.bases()[0]),
                         RankOnePovm::from_basis(mubs.bases()[1])});
        }
    }
    return s;
}

const MeasurementSet &measurement_for(const DimSetup &s, PropositionId id) {
    switch (family_of(id)) {
    case MeasurementFamily::mub: return *s.mub;
    case MeasurementFamily::pair: return *s.pair;
    case MeasurementFamily::sic: return *s.sic;
    }
    return *s.sic;
}

std::size_t measurement_count(const DimSetup &s, PropositionId id) {
    switch (family_of(id)) {
    case MeasurementFamily::mub: return std::get<MubSet>(*s.mub).count();
    case MeasurementFamily::pair: return 2;
    case MeasurementFamily::sic: return 1;
    }
    return 1;
}

std::vector<Cell> build_cells(const CampaignConfig &c,
                              const std::vector<DimSetup> &setups) {
    std::vector<Cell> cells;
    for (std::size_t di = 0; di < setups.size(); ++di) {
        for (const auto id : c.props) {
            std::vector<std::optional<EntropyOrder>> orders;
            if (uses_order(id)) {
                for (const auto a : c.alphas.empty() ? default_orders(id) : c.alphas) {
                    orders.emplace_back(a);
                }
            } else {
                orders.emplace_back(std::nullopt);
            }
            std::vector<EntropyKind> kinds{EntropyKind::tsallis};
            if (uses_kind(id)) {
                kinds.push_back(EntropyKind::renyi);
            }
            const bool with_eta = c.eta && (id == PropositionId::mub_tsallis ||
                                            id == PropositionId::sic_tsallis);
            for (const auto &a : orders) {
                for (const auto kind : kinds) {
                    Cell cell{di, id, {}, a, std::nullopt,
                              measurement_count(setups[di], id)};
                    cell.params.tolerance = c.tolerance;
                    cell.params.kind = kind;
                    cell.params.riesz_trials = 1;
                    if (a && uses_symmetric_orders(id)) {
                        cell.params.orders = SymOrderPair(1.0 - 1.0 / a->value());
                    } else {
                        cell.params.alpha = a;
                    }
                    if (with_eta) {
                        cell.params.eta = *c.eta;
                        cell.eta = c.eta;
                    }
                    cells.push_back(std::move(cell));
                }
            }
        }
    }
    return cells;
}

SampleStates draw_states(const CampaignConfig &c, const DimSetup &s,
                         std::size_t sample) {
    RandomStream rng = RandomStream(c.seed, s.dim).split(sample);
    SampleStates out;
    out.riesz_seed = rng.split(1).key();
    auto rho = random_state(s.dim, rng);
    if (s.needs_product) {
        auto other = random_state(s.dim, rng);
        out.product = tensor(rho, other);
    }
    out.single = std::move(rho);
    return out;
}

CampaignRow evaluate(const CampaignConfig &c, const DimSetup &s, const Cell &cell,
                     const SampleStates &st, std::size_t sample) {
    const DensityMatrix &rho =
        cell.id == PropositionId::entanglement_g ? *st.product : *st.single;
    BoundParams params = cell.params;
    params.riesz_seed = st.riesz_seed;
    CampaignRow row;
    row.report = check_bound(measurement_for(s, cell.id), rho, cell.id, params);
    row.prop = row.report.label;
    row.dim = s.dim;
    row.measurements = cell.measurements;
    row.alpha = cell.alpha;
    row.eta = cell.eta;
    row.seed = c.seed;
    row.sample = sample;
    row.purity = purity(rho);
    return row;
}

struct Plan {
    std::vector<DimSetup> setups;
    std::vector<Cell> cells;
};

Plan make_plan(const CampaignConfig &c) {
    validate(c);
    Plan p;
    for (const auto d : c.dims) {
        p.setups.push_back(setup_dim(c, d));
    }
    p.cells = build_cells(c, p.setups);
    return p;
}

std::vector<CampaignRow> run(const CampaignConfig &c, bool parallel) {
    const Plan plan = make_plan(c);
    const std::size_t n = c.samples;
    const std::size_t nd = plan.setups.size();

    std::vector<SampleStates> states(nd * n);
    std::vector<CampaignRow> rows(plan.cells.size() * n);
    std::exception_ptr failure;

    const auto guarded = [&](auto &&body) {
        try {
            body();
        } catch (...) {
#pragma omp critical(sicmub_campaign_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };

    const auto total_states = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t k = 0; k < total_states; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        guarded([&] {
            states[idx] = draw_states(c, plan.setups[idx / n], idx % n);
        });
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    const auto total_rows = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t k = 0; k < total_rows; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        const Cell &cell = plan.cells[idx / n];
        const std::size_t sample = idx % n;
        guarded([&] {
            rows[idx] = evaluate(c, plan.setups[cell.dim_index], cell,
                                 states[cell.dim_index * n + sample], sample);
        });
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

} // namespace

std::vector<EntropyOrder> default_orders(PropositionId id) {
    const auto make = [](std::initializer_list<double> v) {
        std::vector<EntropyOrder> out;
        for (const double a : v) {
            out.emplace_back(a);
        }
        return out;
    };
    switch (id) {
    case PropositionId::mub_tsallis:
    case PropositionId::sic_tsallis:
        return make({0.5, 1.0, 2.0});
    case PropositionId::mub_renyi:
    case PropositionId::sic_renyi:
        return make({2.0, 3.0, 10.0, kInf});
    case PropositionId::mub_symmetrized:
    case PropositionId::mu_pair:
        return make({1.0, 2.0});
    case PropositionId::sic_simple:
        return make({0.5, 2.0});
    default:
        return {};
    }
}

void validate(const CampaignConfig &c) {
    if (c.samples < 1) {
        throw DomainError("samples must be >= 1");
    }
    if (c.dims.empty()) {
        throw DomainError("at least one dimension is required");
    }
    if (c.props.empty()) {
        throw DomainError("at least one proposition label is required");
    }
    for (const auto d : c.dims) {
        if (d < 2) {
            throw DomainError("dimension must be >= 2");
        }
    }
    if (c.eta && !(*c.eta >= 0.0 && *c.eta <= 1.0)) {
        throw DomainError("eta must lie in [0, 1]");
    }
    if (!(c.tolerance >= 0.0)) {
        throw DomainError("tolerance must be >= 0");
    }
    for (const auto id : c.props) {
        if (!uses_order(id)) {
            continue;
        }
        for (const auto a : c.alphas) {
            validate_order(id, a);
        }
    }
}

CampaignSummary summarize(const std::vector<CampaignRow> &rows) {
    CampaignSummary s;
    s.checks = rows.size();
    for (const auto &r : rows) {
        if (!r.report.passed()) {
            ++s.failures;
        }
        if (r.report.saturated) {
            ++s.saturated;
        }
        s.min_margin = std::min(s.min_margin, r.report.margin);
    }
    return s;
}

std::vector<CampaignRow> run_campaign(const CampaignConfig &config) {
    return run(config, true);
}

std::vector<CampaignRow> run_campaign_serial(const CampaignConfig &config) {
    return run(config, false);
}

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream &out, const std::vector<CampaignRow> &rows) {
    out << kCsvHeader << '\n';
    for (const auto &r : rows) {
        out << r.prop << ',' << r.dim << ',' << r.measurements << ','
            << (r.alpha ? r.alpha->to_string() : "") << ','
            << (r.eta ? format_number(*r.eta) : "") << ',' << r.seed << ','
            << r.sample << ',' << format_number(r.purity) << ','
            << format_number(r.report.lhs) << ',' << format_number(r.report.rhs)
            << ',' << format_number(r.report.margin) << ','
            << (r.report.saturated ? "true" : "false") << '\n';
    }
}

void write_json(std::ostream &out, const std::vector<CampaignRow> &rows,
                const CampaignSummary &summary) {
    // Per-label aggregates; rows themselves belong in the CSV.
    struct Agg {
        std::size_t checks = 0, failures = 0, saturated = 0;
        double min_margin = kInf;
    };
    std::map<std::string, Agg> by_prop;
    for (const auto &r : rows) {
        auto &a = by_prop[r.prop];
        ++a.checks;
        a.failures += r.report.passed() ? 0 : 1;
        a.saturated += r.report.saturated ? 1 : 0;
        a.min_margin = std::min(a.min_margin, r.report.margin);
    }
    nlohmann::json props = nlohmann::json::object();
    for (const auto &[label, a] : by_prop) {
        props[label] = {{"checks", a.checks},
                        {"failures", a.failures},
                        {"saturated", a.saturated},
                        {"min_margin", format_number(a.min_margin)}};
    }
    nlohmann::json j = {{"checks", summary.checks},
                        {"failures", summary.failures},
                        {"saturated", summary.saturated},
                        {"min_margin", format_number(summary.min_margin)},
                        {"props", std::move(props)}};
    out << j.dump(2) << '\n';
}

} // namespace sicmub
