#include "sicmub/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

double checked_purity(std::size_t d, double purity) {
    if (d < 2) {
        throw DomainError("dimension must be >= 2");
    }
    const double lo = 1.0 / static_cast<double>(d);
    constexpr double slack = 1e-12;
    if (!(purity >= lo - slack && purity <= 1.0 + slack)) {
        throw DomainError("purity " + std::to_string(purity) +
                          " outside [1/d, 1]");
    }
    return std::clamp(purity, lo, 1.0);
}

void require_tsallis_range(EntropyOrder alpha) {
    if (alpha.is_infinite() || alpha.value() > 2.0) {
        throw DomainError("Tsallis bound needs alpha in (0, 2], got " +
                          alpha.to_string());
    }
}

void require_renyi_range(EntropyOrder alpha) {
    if (alpha.value() < 2.0) {
        throw DomainError("Renyi bound needs alpha in [2, inf], got " +
                          alpha.to_string());
    }
}

/// alpha/(2(alpha-1)); 1/2 in the infinite-order limit.
double renyi_prefactor(EntropyOrder alpha) {
    if (alpha.is_infinite()) {
        return 0.5;
    }
    const double a = alpha.value();
    return a / (2.0 * (a - 1.0));
}

void check_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("detector efficiency must lie in [0, 1]");
    }
}

/// M d / (purity d + M - 1)
double mub_ratio(std::size_t d, std::size_t count, double purity) {
    if (count < 1) {
        throw DomainError("MUB count must be >= 1");
    }
    const double dd = static_cast<double>(d);
    const double mm = static_cast<double>(count);
    return mm * dd / (purity * dd + mm - 1.0);
}

/// d(d+1)/(purity + 1)
double sic_ratio(std::size_t d, double purity) {
    const double dd = static_cast<double>(d);
    return dd * (dd + 1.0) / (purity + 1.0);
}

void require_same_dim(const RankOnePovm &m, const RankOnePovm &n,
                      const DensityMatrix &rho) {
    if (m.dim() != rho.dim() || n.dim() != rho.dim()) {
        throw DimensionError("POVM pair and state dimensions differ");
    }
}

} // namespace

bool BoundReport::passed() const {
    if (relation == Relation::equality) {
        return std::abs(margin) <= tolerance;
    }
    return margin >= -tolerance;
}

BoundReport make_report(std::string label, Relation relation, double lhs,
                        double rhs, double tolerance) {
    BoundReport r;
    r.label = std::move(label);
    r.relation = relation;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = relation == Relation::upper_bound ? rhs - lhs : lhs - rhs;
    r.tolerance = tolerance;
    r.saturated = std::abs(lhs - rhs) <= tolerance;
    return r;
}

// ---------------------------------------------------------------------------
// MUB sets

double mub_tsallis_bound(std::size_t d, std::size_t count, EntropyOrder alpha,
                         double purity, bool state_independent) {
    require_tsallis_range(alpha);
    const double p = state_independent ? 1.0 : checked_purity(d, purity);
    return alpha_log(mub_ratio(d, count, p), alpha);
}

double mub_tsallis_bound_inefficiency(std::size_t d, std::size_t count,
                                      EntropyOrder alpha, double purity,
                                      double eta) {
    check_eta(eta);
    return std::pow(eta, alpha.value()) *
               mub_tsallis_bound(d, count, alpha, purity) +
           binary_tsallis(eta, alpha);
}

double mub_renyi_bound(std::size_t d, std::size_t count, EntropyOrder alpha,
                       double purity, bool state_independent) {
    require_renyi_range(alpha);
    const double p = state_independent ? 1.0 : checked_purity(d, purity);
    return renyi_prefactor(alpha) * std::log(mub_ratio(d, count, p));
}

double mub_minentropy_bound(std::size_t d, std::size_t count, double purity,
                            bool state_independent) {
    if (count < 1) {
        throw DomainError("MUB count must be >= 1");
    }
    const double dd = static_cast<double>(d);
    const double root_m = std::sqrt(static_cast<double>(count));
    if (state_independent) {
        checked_purity(d, 1.0);
        return std::log(root_m * dd / (dd + root_m - 1.0));
    }
    const double p = checked_purity(d, purity);
    return std::log(dd) - std::log1p(std::sqrt(dd - 1.0) *
                                     std::sqrt(std::max(p * dd - 1.0, 0.0)) /
                                     root_m);
}

double max_prob_envelope(std::size_t d, double x) {
    const double dd = static_cast<double>(d);
    const double lo = 1.0 / dd;
    if (!(x >= lo - 1e-12 && x <= 1.0 + 1e-12)) {
        throw DomainError("max_prob_envelope: argument outside [1/d, 1]");
    }
    x = std::clamp(x, lo, 1.0);
    return (1.0 + std::sqrt(dd - 1.0) * std::sqrt(x * dd - 1.0)) / dd;
}

BoundReport coincidence_sum_check(const MubSet &mubs, const DensityMatrix &rho) {
    double lhs = 0.0;
    for (const auto &b : mubs.bases()) {
        lhs += index_of_coincidence(probabilities(b, rho));
    }
    const double rhs = purity(rho) + static_cast<double>(mubs.count() - 1) /
                                         static_cast<double>(mubs.dim());
    return make_report("LWBM-sum", Relation::upper_bound, lhs, rhs, 1e-12);
}

double mub_symmetrized_bound(std::size_t d, const SymOrderPair &orders,
                             EntropyKind kind) {
    const double dd = static_cast<double>(d);
    if (kind == EntropyKind::renyi) {
        return 0.5 * std::log(dd);
    }
    return 0.5 * alpha_log(dd, orders.mu());
}

// ---------------------------------------------------------------------------
// Single SIC-POVM

double sic_tsallis_bound(std::size_t d, EntropyOrder alpha, double purity,
                         bool state_independent) {
    require_tsallis_range(alpha);
    const double p = state_independent ? 1.0 : checked_purity(d, purity);
    return alpha_log(sic_ratio(d, p), alpha);
}

double sic_tsallis_bound_inefficiency(std::size_t d, EntropyOrder alpha,
                                      double purity, double eta) {
    check_eta(eta);
    return std::pow(eta, alpha.value()) * sic_tsallis_bound(d, alpha, purity) +
           binary_tsallis(eta, alpha);
}

double sic_renyi_bound(std::size_t d, EntropyOrder alpha, double purity) {
    require_renyi_range(alpha);
    const double p = checked_purity(d, purity);
    return renyi_prefactor(alpha) * std::log(sic_ratio(d, p));
}

double sic_minentropy_bound(std::size_t d, double purity) {
    const double p = checked_purity(d, purity);
    const double dd = static_cast<double>(d);
    return 2.0 * std::log(dd) -
           std::log1p(std::sqrt(dd - 1.0) * std::sqrt(std::max(p * dd - 1.0, 0.0)));
}

SimpleBoundReports simple_bounds(const ProbDist &p, std::size_t d,
                                 EntropyOrder alpha, EntropyKind kind,
                                 double tolerance) {
    const double pmax = p.max();
    const double dd = static_cast<double>(d);
    if (pmax > 1.0 / dd + 1e-12) {
        throw PreconditionError("simple_bounds: max probability " +
                                std::to_string(pmax) + " exceeds 1/d");
    }
    double from_max = 0.0;
    double floor = 0.0;
    if (kind == EntropyKind::tsallis) {
        from_max = alpha_log(1.0 / pmax, alpha);
        floor = alpha_log(dd, alpha);
    } else {
        from_max = -std::log(pmax);
        floor = std::log(dd);
    }
    const std::string label =
        std::string("SIC-simple/") + std::string(to_string(kind));
    return {
        make_report(label, Relation::lower_bound, entropy(p, alpha, kind),
                    from_max, tolerance),
        make_report(label + "/floor", Relation::lower_bound, from_max, floor,
                    tolerance),
    };
}

// ---------------------------------------------------------------------------
// Pairs of rank-one POVMs

double mu_g_factor(const RankOnePovm &m, const RankOnePovm &n,
                   const DensityMatrix &rho) {
    require_same_dim(m, n, rho);
    const auto &r = rho.mat();
    std::vector<double> pn;
    for (const auto &nj : n.vectors()) {
        pn.push_back(expectation(nj, r, nj).real());
    }
    double g = 0.0;
    for (const auto &mi : m.vectors()) {
        const double qi = expectation(mi, r, mi).real();
        if (qi <= kZeroProbability) {
            continue;
        }
        const ComplexVector rho_mi = r * mi;
        for (std::size_t j = 0; j < n.size(); ++j) {
            if (pn[j] <= kZeroProbability) {
                continue;
            }
            const auto &nj = n.vectors()[j];
            const double num = std::abs(inner(mi, nj) * inner(nj, rho_mi));
            g = std::max(g, num / std::sqrt(qi * pn[j]));
        }
    }
    return g;
}

double mu_overlap_bound(const RankOnePovm &m, const RankOnePovm &n) {
    if (m.dim() != n.dim()) {
        throw DimensionError("POVM pair dimensions differ");
    }
    double f = 0.0;
    for (const auto &mi : m.vectors()) {
        for (const auto &nj : n.vectors()) {
            f = std::max(f, std::abs(inner(mi, nj)));
        }
    }
    return f;
}

MuPairReports mu_pair_bounds(const RankOnePovm &m, const RankOnePovm &n,
                             const DensityMatrix &rho, EntropyOrder alpha,
                             EntropyOrder beta, double tolerance) {
    const double conj = 1.0 / alpha.value() + 1.0 / beta.value();
    if (std::abs(conj - 2.0) > 1e-12) {
        throw DomainError("orders must satisfy 1/alpha + 1/beta = 2");
    }
    require_same_dim(m, n, rho);
    const EntropyOrder mu(std::max(alpha.value(), beta.value()));

    const auto q = probabilities(m, rho);
    const auto p = probabilities(n, rho);

    MuPairReports out;
    out.g = mu_g_factor(m, n, rho);
    out.f_bar = mu_overlap_bound(m, n);

    const double h_sum = tsallis(q, alpha) + tsallis(p, beta);
    const double r_sum = renyi(q, alpha) + renyi(p, beta);
    const auto tsallis_rhs = [&](double x) { return alpha_log(1.0 / (x * x), mu); };
    const auto renyi_rhs = [](double x) { return -2.0 * std::log(x); };

    out.tsallis = make_report("P9-mu-pair/tsallis", Relation::lower_bound, h_sum,
                              tsallis_rhs(out.g), tolerance);
    out.renyi = make_report("P9-mu-pair/renyi", Relation::lower_bound, r_sum,
                            renyi_rhs(out.g), tolerance);
    out.tsallis_fbar = make_report("P9-mu-pair/tsallis-fbar",
                                   Relation::lower_bound, h_sum,
                                   tsallis_rhs(out.f_bar), tolerance);
    out.renyi_fbar = make_report("P9-mu-pair/renyi-fbar", Relation::lower_bound,
                                 r_sum, renyi_rhs(out.f_bar), tolerance);
    return out;
}

ComplexMatrix riesz_transform(const RankOnePovm &m, const RankOnePovm &n,
                              const DensityMatrix &rho) {
    require_same_dim(m, n, rho);
    const auto &r = rho.mat();
    ComplexMatrix t(m.size(), n.size());
    std::vector<double> pn;
    for (const auto &nj : n.vectors()) {
        pn.push_back(expectation(nj, r, nj).real());
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto &mi = m.vectors()[i];
        const double qi = expectation(mi, r, mi).real();
        if (qi <= kZeroProbability) {
            continue;
        }
        const ComplexVector rho_mi = r * mi;
        for (std::size_t j = 0; j < n.size(); ++j) {
            if (pn[j] <= kZeroProbability) {
                continue;
            }
            const auto &nj = n.vectors()[j];
            t(i, j) = inner(mi, nj) * inner(nj, rho_mi) / std::sqrt(qi * pn[j]);
        }
    }
    return t;
}

BoundReport riesz_precondition_check(const RankOnePovm &m, const RankOnePovm &n,
                                     const DensityMatrix &rho,
                                     const ComplexVector &u, std::size_t trials,
                                     RandomStream &rng) {
    const ComplexMatrix t = riesz_transform(m, n, rho);
    if (u.dim() != n.size()) {
        throw DimensionError("riesz_precondition_check: input length must "
                             "equal the number of outcomes of N");
    }
    constexpr double tol = 1e-12;
    const auto check = [&](const ComplexVector &x) {
        return make_report("APXB-riesz", Relation::upper_bound,
                           (t * x).norm(), x.norm(), tol);
    };
    BoundReport worst = check(u);
    for (std::size_t k = 0; k < trials; ++k) {
        ComplexVector x(n.size());
        for (std::size_t j = 0; j < n.size(); ++j) {
            x[j] = rng.complex_normal();
        }
        auto r = check(x);
        if (r.margin < worst.margin) {
            worst = std::move(r);
        }
    }
    return worst;
}

} // namespace sicmub
