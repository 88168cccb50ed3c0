#include "sicmub/check_bound.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "sicmub/entanglement.hpp"
#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

struct LabelEntry {
    PropositionId id;
    std::string_view label;
};

constexpr std::array<LabelEntry, 14> kLabels{{
    {PropositionId::mub_tsallis, "P1-mub-tsallis"},
    {PropositionId::mub_renyi, "P2-mub-renyi"},
    {PropositionId::mub_minentropy, "P3-mub-minent"},
    {PropositionId::mub_symmetrized, "P4-mub-sym"},
    {PropositionId::sic_coincidence, "P5-sic-ic"},
    {PropositionId::sic_tsallis, "P6-sic-tsallis"},
    {PropositionId::sic_renyi, "P7-sic-renyi"},
    {PropositionId::sic_minentropy, "P8-sic-minent"},
    {PropositionId::mu_pair, "P9-mu-pair"},
    {PropositionId::coincidence_sum, "LWBM-sum"},
    {PropositionId::max_element, "APXA-max"},
    {PropositionId::riesz, "APXB-riesz"},
    {PropositionId::entanglement_g, "ENT-G"},
    {PropositionId::sic_simple, "SIC-simple"},
}};

template <class T>
const T &expect(const MeasurementSet &meas, PropositionId id, const char *what) {
    const T *p = std::get_if<T>(&meas);
    if (p == nullptr) {
        throw PreconditionError(std::string(to_string(id)) + " requires " + what);
    }
    return *p;
}

EntropyOrder need_alpha(const BoundParams &params, PropositionId id) {
    if (!params.alpha) {
        throw DomainError(std::string(to_string(id)) + " requires an order alpha");
    }
    return *params.alpha;
}

SymOrderPair need_orders(const BoundParams &params, PropositionId id) {
    if (params.orders) {
        return *params.orders;
    }
    if (params.alpha) {
        validate_order(id, *params.alpha);
        return SymOrderPair(1.0 - 1.0 / params.alpha->value());
    }
    throw DomainError(std::string(to_string(id)) + " requires s or alpha");
}

void require_state_dim(std::size_t expected, const DensityMatrix &rho) {
    if (rho.dim() != expected) {
        throw DimensionError("state dimension " + std::to_string(rho.dim()) +
                             " does not match measurement dimension " +
                             std::to_string(expected));
    }
}

std::vector<ProbDist> basis_distributions(const MubSet &mubs,
                                          const DensityMatrix &rho,
                                          double eta) {
    std::vector<ProbDist> out;
    out.reserve(mubs.count());
    for (const auto &b : mubs.bases()) {
        auto p = probabilities(b, rho);
        out.push_back(eta < 1.0 ? distort(p, eta) : std::move(p));
    }
    return out;
}

template <class F>
double average(const std::vector<ProbDist> &ps, F &&f) {
    double s = 0.0;
    for (const auto &p : ps) {
        s += f(p);
    }
    return s / static_cast<double>(ps.size());
}

BoundReport check_mub(const MubSet &mubs, const DensityMatrix &rho,
                      PropositionId id, const BoundParams &params) {
    const std::size_t d = mubs.dim();
    const std::size_t m = mubs.count();
    require_state_dim(d, rho);
    const double pur = purity(rho);
    const double tol = params.tolerance;
    const std::string label(to_string(id));

    switch (id) {
    case PropositionId::mub_tsallis: {
        const auto a = need_alpha(params, id);
        const auto ps = basis_distributions(mubs, rho, params.eta);
        const double lhs = average(ps, [&](const ProbDist &p) { return tsallis(p, a); });
        const double rhs =
            params.eta < 1.0
                ? mub_tsallis_bound_inefficiency(d, m, a,
                                                 params.state_independent ? 1.0 : pur,
                                                 params.eta)
                : mub_tsallis_bound(d, m, a, pur, params.state_independent);
        return make_report(label, Relation::lower_bound, lhs, rhs, tol);
    }
    case PropositionId::mub_renyi: {
        const auto a = need_alpha(params, id);
        const auto ps = basis_distributions(mubs, rho, 1.0);
        const double lhs = average(ps, [&](const ProbDist &p) { return renyi(p, a); });
        return make_report(label, Relation::lower_bound, lhs,
                           mub_renyi_bound(d, m, a, pur, params.state_independent),
                           tol);
    }
    case PropositionId::mub_minentropy: {
        const auto ps = basis_distributions(mubs, rho, 1.0);
        const double lhs = average(ps, [](const ProbDist &p) {
            return renyi(p, EntropyOrder::infinity());
        });
        return make_report(label, Relation::lower_bound, lhs,
                           mub_minentropy_bound(d, m, pur, params.state_independent),
                           tol);
    }
    case PropositionId::mub_symmetrized: {
        const auto orders = need_orders(params, id);
        const auto ps = basis_distributions(mubs, rho, 1.0);
        const double lhs = average(ps, [&](const ProbDist &p) {
            return symmetrized(p, orders, params.kind);
        });
        return make_report(label + "/" + std::string(to_string(params.kind)),
                           Relation::lower_bound, lhs,
                           mub_symmetrized_bound(d, orders, params.kind), tol);
    }
    case PropositionId::coincidence_sum: {
        auto r = coincidence_sum_check(mubs, rho);
        return make_report(r.label, r.relation, r.lhs, r.rhs, tol);
    }
    default:
        throw PreconditionError(label + " is not a MUB statement");
    }
}

BoundReport check_sic(const SicPovm &sic, const DensityMatrix &rho,
                      PropositionId id, const BoundParams &params) {
    const std::size_t d = sic.dim();
    const double tol = params.tolerance;
    const std::string label(to_string(id));

    if (id == PropositionId::entanglement_g) {
        require_state_dim(d * d, rho);
        const auto povm = product_sic_povm(sic);
        const double g = correlation_G(povm, rho);
        double rhs = universal_separable_bound(d);
        if (!params.state_independent) {
            const auto ra = partial_trace_b(rho.mat(), d, d);
            const auto rb = partial_trace_a(rho.mat(), d, d);
            const double pa = std::min(hs_inner(ra, ra).real(), 1.0);
            const double pb = std::min(hs_inner(rb, rb).real(), 1.0);
            rhs = separable_bound(d, pa, pb);
        }
        return make_report(label, Relation::upper_bound, g, rhs, tol);
    }

    require_state_dim(d, rho);
    const double pur = purity(rho);
    const auto p = probabilities(sic, rho);

    switch (id) {
    case PropositionId::sic_coincidence: {
        const double dd = static_cast<double>(d);
        return make_report(label, Relation::equality, index_of_coincidence(p),
                           (pur + 1.0) / (dd * (dd + 1.0)), tol);
    }
    case PropositionId::sic_tsallis: {
        const auto a = need_alpha(params, id);
        if (params.eta < 1.0) {
            const double lhs = tsallis(distort(p, params.eta), a);
            const double rhs = sic_tsallis_bound_inefficiency(
                d, a, params.state_independent ? 1.0 : pur, params.eta);
            return make_report(label, Relation::lower_bound, lhs, rhs, tol);
        }
        return make_report(label, Relation::lower_bound, tsallis(p, a),
                           sic_tsallis_bound(d, a, pur, params.state_independent),
                           tol);
    }
    case PropositionId::sic_renyi: {
        const auto a = need_alpha(params, id);
        return make_report(label, Relation::lower_bound, renyi(p, a),
                           sic_renyi_bound(d, a, params.state_independent ? 1.0 : pur),
                           tol);
    }
    case PropositionId::sic_minentropy:
        return make_report(label, Relation::lower_bound,
                           renyi(p, EntropyOrder::infinity()),
                           sic_minentropy_bound(d, params.state_independent ? 1.0 : pur),
                           tol);
    case PropositionId::max_element:
        return make_report(label, Relation::upper_bound, p.max(),
                           max_prob_bound(p.size(), index_of_coincidence(p)), tol);
    case PropositionId::sic_simple: {
        const auto a = need_alpha(params, id);
        auto r = simple_bounds(p, d, a, params.kind, tol).entropy;
        r.label = label + "/" + std::string(to_string(params.kind));
        return r;
    }
    default:
        throw PreconditionError(label + " is not a SIC statement");
    }
}

BoundReport check_pair(const PovmPair &pair, const DensityMatrix &rho,
                       PropositionId id, const BoundParams &params) {
    require_state_dim(pair.first.dim(), rho);
    const std::string label(to_string(id));
    if (id == PropositionId::riesz) {
        RandomStream rng(params.riesz_seed, 0);
        const auto pn = probabilities(pair.second, rho);
        ComplexVector u(pn.size());
        for (std::size_t j = 0; j < pn.size(); ++j) {
            u[j] = std::sqrt(pn[j]);
        }
        auto r = riesz_precondition_check(pair.first, pair.second, rho, u,
                                          params.riesz_trials, rng);
        return r;
    }
    if (id == PropositionId::max_element) {
        const auto p = probabilities(pair.first, rho);
        return make_report(label, Relation::upper_bound, p.max(),
                           max_prob_bound(p.size(), index_of_coincidence(p)),
                           params.tolerance);
    }
    if (id != PropositionId::mu_pair) {
        throw PreconditionError(label + " is not a statement about a POVM pair");
    }
    const auto orders = need_orders(params, id);
    const auto reports = mu_pair_bounds(pair.first, pair.second, rho,
                                        orders.alpha(), orders.beta(),
                                        params.tolerance);
    const bool tsal = params.kind == EntropyKind::tsallis;
    BoundReport r = params.state_independent
                        ? (tsal ? reports.tsallis_fbar : reports.renyi_fbar)
                        : (tsal ? reports.tsallis : reports.renyi);
    r.label = label + "/" + std::string(to_string(params.kind));
    return r;
}

} // namespace

std::string_view to_string(PropositionId id) {
    for (const auto &e : kLabels) {
        if (e.id == id) {
            return e.label;
        }
    }
    return "unknown";
}

PropositionId parse_proposition(std::string_view label) {
    for (const auto &e : kLabels) {
        if (e.label == label) {
            return e.id;
        }
    }
    throw DomainError("unknown proposition label '" + std::string(label) + "'");
}

const std::vector<PropositionId> &all_propositions() {
    static const std::vector<PropositionId> ids = [] {
        std::vector<PropositionId> v;
        for (const auto &e : kLabels) {
            v.push_back(e.id);
        }
        return v;
    }();
    return ids;
}

MeasurementFamily family_of(PropositionId id) {
    switch (id) {
    case PropositionId::mub_tsallis:
    case PropositionId::mub_renyi:
    case PropositionId::mub_minentropy:
    case PropositionId::mub_symmetrized:
    case PropositionId::coincidence_sum:
        return MeasurementFamily::mub;
    case PropositionId::mu_pair:
    case PropositionId::riesz:
        return MeasurementFamily::pair;
    default:
        return MeasurementFamily::sic;
    }
}

bool uses_order(PropositionId id) {
    switch (id) {
    case PropositionId::mub_tsallis:
    case PropositionId::mub_renyi:
    case PropositionId::sic_tsallis:
    case PropositionId::sic_renyi:
    case PropositionId::sic_simple:
        return true;
    default:
        return uses_symmetric_orders(id);
    }
}

bool uses_symmetric_orders(PropositionId id) {
    return id == PropositionId::mub_symmetrized || id == PropositionId::mu_pair;
}

bool uses_kind(PropositionId id) {
    return uses_symmetric_orders(id) || id == PropositionId::sic_simple;
}

void validate_order(PropositionId id, EntropyOrder alpha) {
    const double a = alpha.value();
    const std::string label(to_string(id));
    switch (id) {
    case PropositionId::mub_tsallis:
    case PropositionId::sic_tsallis:
        if (a > 2.0) {
            throw DomainError(label + ": alpha = " + alpha.to_string() +
                              " is outside (0, 2]");
        }
        return;
    case PropositionId::mub_renyi:
    case PropositionId::sic_renyi:
        if (a < 2.0) {
            throw DomainError(label + ": alpha = " + alpha.to_string() +
                              " is outside [2, inf]");
        }
        return;
    case PropositionId::mub_symmetrized:
    case PropositionId::mu_pair:
        if (alpha.is_infinite() || a < 1.0) {
            throw DomainError(label + ": alpha = " + alpha.to_string() +
                              " is outside [1, inf)");
        }
        return;
    default:
        return;
    }
}

BoundReport check_bound(const MeasurementSet &meas, const DensityMatrix &rho,
                        PropositionId id, const BoundParams &params) {
    if (params.alpha && uses_order(id) && !uses_symmetric_orders(id)) {
        validate_order(id, *params.alpha);
    }
    switch (family_of(id)) {
    case MeasurementFamily::mub:
        return check_mub(expect<MubSet>(meas, id, "a MUB set"), rho, id, params);
    case MeasurementFamily::pair:
        return check_pair(expect<PovmPair>(meas, id, "a pair of rank-one POVMs"),
                          rho, id, params);
    case MeasurementFamily::sic:
        if (id == PropositionId::max_element) {
            if (const auto *pair = std::get_if<PovmPair>(&meas)) {
                return check_pair(*pair, rho, id, params);
            }
            if (const auto *mubs = std::get_if<MubSet>(&meas)) {
                require_state_dim(mubs->dim(), rho);
                const auto p = probabilities(mubs->bases().front(), rho);
                return make_report(std::string(to_string(id)), Relation::upper_bound,
                                   p.max(),
                                   max_prob_bound(p.size(), index_of_coincidence(p)),
                                   params.tolerance);
            }
        }
        return check_sic(expect<SicPovm>(meas, id, "a SIC-POVM"), rho, id, params);
    }
    throw PreconditionError("unreachable");
}

} // namespace sicmub
