#include "sicmub/entanglement.hpp"

#include <cmath>
#include <string>

#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

void require_bipartite(const BipartitePovm &povm, const DensityMatrix &rho) {
    const std::size_t d = povm.party_dim();
    if (rho.dim() != d * d) {
        throw DimensionError("bipartite state must have dimension d^2 = " +
                             std::to_string(d * d));
    }
}

} // namespace

ComplexMatrix BipartitePovm::element(std::size_t i, std::size_t j) const {
    return weight() * ComplexMatrix::projector(ket(i, j));
}

BipartitePovm product_sic_povm(const SicPovm &sic) {
    const std::size_t d = sic.dim();
    const std::size_t n = d * d;
    std::vector<ComplexVector> kets;
    kets.reserve(n * n);
    for (const auto &a : sic.kets()) {
        for (const auto &b : sic.kets()) {
            kets.push_back(kron(a, conj_vector(b)));
        }
    }
    BipartitePovm povm(d, std::move(kets));

    ComplexMatrix total = ComplexMatrix::zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            total += ComplexMatrix::projector(povm.ket(i, j));
        }
    }
    total *= povm.weight();
    const double dev = max_abs_diff(total, ComplexMatrix::identity(n));
    if (dev > 1e-8) {
        throw ConstructionError("product SIC POVM is incomplete (deviation " +
                                std::to_string(dev) + ")");
    }
    return povm;
}

ProbDist probabilities(const BipartitePovm &povm, const DensityMatrix &rho) {
    require_bipartite(povm, rho);
    const std::size_t n = povm.outcomes_per_party();
    std::vector<double> p;
    p.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto &k = povm.ket(i, j);
            p.push_back(povm.weight() * expectation(k, rho.mat(), k).real());
        }
    }
    return ProbDist::from_values(std::move(p), 1e-10);
}

DensityMatrix maximally_entangled(std::size_t d) {
    if (d < 2) {
        throw DomainError("maximally_entangled: dimension must be >= 2");
    }
    ComplexVector phi(d * d);
    for (std::size_t k = 0; k < d; ++k) {
        phi[k * d + k] = 1.0;
    }
    return DensityMatrix::pure(phi);
}

double correlation_G(const BipartitePovm &povm, const DensityMatrix &rho) {
    require_bipartite(povm, rho);
    double g = 0.0;
    for (std::size_t j = 0; j < povm.outcomes_per_party(); ++j) {
        const auto &k = povm.ket(j, j);
        g += povm.weight() * expectation(k, rho.mat(), k).real();
    }
    return g;
}

double separable_bound(std::size_t d, double purity_a, double purity_b) {
    const double dd = static_cast<double>(d);
    const double lo = 1.0 / dd - 1e-12;
    for (const double p : {purity_a, purity_b}) {
        if (!(p >= lo && p <= 1.0 + 1e-12)) {
            throw DomainError("separable_bound: purity outside [1/d, 1]");
        }
    }
    return std::sqrt(purity_a + 1.0) * std::sqrt(purity_b + 1.0) /
           (dd * (dd + 1.0));
}

double universal_separable_bound(std::size_t d) {
    const double dd = static_cast<double>(d);
    return 2.0 / (dd * (dd + 1.0));
}

EntanglementVerdict detect_entanglement(const SicPovm &sic,
                                        const DensityMatrix &rho) {
    const auto povm = product_sic_povm(sic);
    const double g = correlation_G(povm, rho);
    const double bound = universal_separable_bound(sic.dim());
    constexpr double tol = 1e-12;
    EntanglementVerdict v;
    v.entangled = g > bound + tol;
    v.report = make_report("ENT-G", Relation::upper_bound, g, bound, tol);
    return v;
}

} // namespace sicmub
