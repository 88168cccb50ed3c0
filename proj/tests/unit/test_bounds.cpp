#include <doctest.h>

#include <cmath>

#include "convert.hpp"
#include "sicmub/bounds.hpp"
#include "sicmub/errors.hpp"

using namespace sicmub;

namespace {

double avg_entropy(const MubSet &mubs, const DensityMatrix &rho, double a, bool tsal) {
    const auto r = to_oracle(rho);
    double s = 0;
    for (const auto &b : mubs.bases()) {
        std::vector<double> p;
        for (const auto &v : b.vectors()) p.push_back(oracle::born(to_oracle(v), r));
        s += tsal ? oracle::tsallis(p, a) : oracle::renyi(p, a);
    }
    return s / static_cast<double>(mubs.count());
}

RankOnePovm rotated_sic(std::size_t d, std::uint64_t seed) {
    RandomStream rng(seed, d);
    const auto u = random_unitary(d, rng);
    const auto sic = builtin_sic(d);
    std::vector<ComplexVector> kets;
    for (const auto &k : sic.kets()) kets.push_back(u * k);
    return RankOnePovm::from_sic(SicPovm::from_kets(kets));
}

} // namespace

TEST_CASE("MUB Tsallis bound special values") {
    for (std::size_t d : {2u, 3u, 5u}) {
        const double dd = double(d);
        CHECK(mub_tsallis_bound(d, d + 1, EntropyOrder(1.0), 1.0) ==
              doctest::Approx(std::log((dd + 1.0) / 2.0)).epsilon(1e-14));
        CHECK(mub_tsallis_bound(d, 1, EntropyOrder(0.5), 1.0) == doctest::Approx(0.0));
        CHECK(mub_tsallis_bound(d, 1, EntropyOrder(0.5), 0.7) ==
              doctest::Approx(oracle::ln_a(1.0 / 0.7, 0.5)));
    }
    CHECK(mub_tsallis_bound(3, 4, EntropyOrder(1.0), 1.0 / 3.0) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));
    const auto mubs = mub_construct(3, 4);
    CHECK(avg_entropy(mubs, DensityMatrix::maximally_mixed(3), 1.0, true) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-13));
    CHECK(mub_tsallis_bound(3, 4, EntropyOrder(0.5), 0.2, true) ==
          mub_tsallis_bound(3, 4, EntropyOrder(0.5), 1.0));
    CHECK_THROWS_AS((void)mub_tsallis_bound(3, 4, EntropyOrder(3.0), 1.0), DomainError);
    CHECK_THROWS_AS((void)mub_tsallis_bound(3, 4, EntropyOrder(1.0), 0.2), DomainError);
    CHECK_THROWS_AS((void)mub_tsallis_bound(3, 4, EntropyOrder(1.0), 1.1), DomainError);
}

TEST_CASE("MUB Tsallis bound with detector inefficiency") {
    for (double a : {0.5, 1.0, 2.0}) {
        const EntropyOrder o(a);
        CHECK(mub_tsallis_bound_inefficiency(3, 4, o, 0.6, 1.0) ==
              doctest::Approx(mub_tsallis_bound(3, 4, o, 0.6)).epsilon(1e-15));
        CHECK(mub_tsallis_bound_inefficiency(3, 4, o, 0.6, 0.0) == 0.0);
    }
    for (double eta : {0.3, 0.8}) {
        CHECK(mub_tsallis_bound_inefficiency(3, 4, EntropyOrder(1.0), 0.6, eta) ==
              doctest::Approx(eta * mub_tsallis_bound(3, 4, EntropyOrder(1.0), 0.6) +
                              oracle::tsallis({eta, 1 - eta}, 1.0))
                  .epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)mub_tsallis_bound_inefficiency(3, 4, EntropyOrder(1.0), 0.6, 1.1),
                    DomainError);
}

TEST_CASE("MUB Renyi bound") {
    const double r2 = mub_renyi_bound(3, 4, EntropyOrder(2.0), 0.5);
    CHECK(r2 == doctest::Approx(std::log(12.0 / (1.5 + 3.0))).epsilon(1e-14));
    CHECK(mub_renyi_bound(3, 4, EntropyOrder::infinity(), 0.5) ==
          doctest::Approx(0.5 * r2).epsilon(1e-14));
    CHECK(mub_renyi_bound(3, 4, EntropyOrder(3.0), 0.5) ==
          doctest::Approx(0.75 * r2).epsilon(1e-14));
    CHECK(mub_renyi_bound(2, 3, EntropyOrder(2.0), 1.0) ==
          doctest::Approx(std::log(1.5)).epsilon(1e-15));
    CHECK_THROWS_AS((void)mub_renyi_bound(3, 4, EntropyOrder(1.5), 0.5), DomainError);

    // Saturation at the Bloch state (1,1,1)/sqrt(3) with the Pauli MUBs.
    const double r = 1.0 / std::sqrt(3.0);
    const auto rho = from_bloch({{r, r, r}});
    CHECK(std::abs(avg_entropy(mub_construct(2, 3), rho, 2.0, false) - std::log(1.5)) <= 1e-12);
}

TEST_CASE("MUB min-entropy bound") {
    for (std::size_t d : {2u, 3u, 5u}) {
        CHECK(mub_minentropy_bound(d, d + 1, 1.0 / double(d)) ==
              doctest::Approx(std::log(double(d))).epsilon(1e-14));
        for (std::size_t m = 2; m <= d + 1; ++m) {
            CHECK(mub_minentropy_bound(d, m, 1.0) ==
                  doctest::Approx(mub_minentropy_bound(d, m, 0.4, true)).epsilon(1e-14));
        }
    }
    CHECK(mub_minentropy_bound(2, 3, 1.0) ==
          doctest::Approx(std::log(2.0 * std::sqrt(3.0) / (1.0 + std::sqrt(3.0)))).epsilon(1e-14));
}

TEST_CASE("max-probability envelope") {
    CHECK(max_prob_envelope(3, 1.0 / 3.0) == doctest::Approx(1.0 / 3.0));
    CHECK(max_prob_envelope(3, 1.0) == doctest::Approx(1.0));
    CHECK(max_prob_envelope(4, 1.0 / 3.0) == doctest::Approx(max_prob_bound(4, 1.0 / 3.0)));
}

TEST_CASE("coincidence sum over MUBs") {
    for (std::size_t d : {2u, 3u, 5u}) {
        for (std::size_t m = 2; m <= d + 1; ++m) {
            const auto r = coincidence_sum_check(mub_construct(d, m),
                                                 DensityMatrix::maximally_mixed(d));
            CHECK(r.lhs == doctest::Approx(double(m) / double(d)).epsilon(1e-14));
            CHECK(r.rhs == doctest::Approx(double(m) / double(d)).epsilon(1e-14));
            CHECK(r.saturated);
            CHECK(r.passed());
        }
    }
    RandomStream rng(1, 1);
    const auto pauli = mub_construct(2, 3);
    for (int t = 0; t < 100; ++t) {
        const auto r = coincidence_sum_check(pauli, random_pure(2, rng));
        CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(r.saturated);
    }
    const auto mubs = mub_construct(3, 4);
    double worst = kInf;
    for (int t = 0; t < 1000; ++t) {
        const auto rho = random_state(3, rng);
        const auto r = coincidence_sum_check(mubs, rho);
        // Oracle lhs by direct probability computation.
        double lhs = 0;
        for (const auto &b : mubs.bases()) {
            std::vector<double> p;
            for (const auto &v : b.vectors()) p.push_back(oracle::born(to_oracle(v), to_oracle(rho)));
            lhs += oracle::ic(p);
        }
        CHECK(std::abs(lhs - r.lhs) < 1e-13);
        worst = std::min(worst, r.margin);
    }
    CHECK(worst >= -1e-12);
}

TEST_CASE("symmetrized MUB bounds") {
    for (auto kind : {EntropyKind::renyi, EntropyKind::tsallis}) {
        CHECK(mub_symmetrized_bound(5, SymOrderPair(0.0), kind) ==
              doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-15));
    }
    CHECK(mub_symmetrized_bound(5, SymOrderPair(0.7), EntropyKind::renyi) ==
          doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-15));
    CHECK(mub_symmetrized_bound(4, SymOrderPair(0.5), EntropyKind::tsallis) ==
          doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("SIC Tsallis bound") {
    for (std::size_t d : {2u, 3u}) {
        const double dd = double(d);
        CHECK(sic_tsallis_bound(d, EntropyOrder(1.0), 1.0) ==
              doctest::Approx(std::log(dd * (dd + 1) / 2)).epsilon(1e-14));
        for (double a : {0.5, 1.0, 2.0}) {
            CHECK(sic_tsallis_bound(d, EntropyOrder(a), 1.0 / dd) ==
                  doctest::Approx(oracle::ln_a(dd * dd, a)).epsilon(1e-13));
            const auto p = probabilities(builtin_sic(d), DensityMatrix::maximally_mixed(d));
            CHECK(std::abs(tsallis(p, EntropyOrder(a)) - sic_tsallis_bound(d, EntropyOrder(a), 1.0 / dd)) <
                  1e-12);
            CHECK(sic_tsallis_bound_inefficiency(d, EntropyOrder(a), 0.7, 1.0) ==
                  doctest::Approx(sic_tsallis_bound(d, EntropyOrder(a), 0.7)).epsilon(1e-15));
        }
        CHECK(sic_tsallis_bound_inefficiency(d, EntropyOrder(1.0), 0.7, 0.3) ==
              doctest::Approx(0.3 * sic_tsallis_bound(d, EntropyOrder(1.0), 0.7) +
                              oracle::tsallis({0.3, 0.7}, 1.0))
                  .epsilon(1e-14));
    }
    CHECK(sic_tsallis_bound(2, EntropyOrder(1.0), 1.0) > std::log(2.0));
    CHECK_THROWS_AS((void)sic_tsallis_bound(2, EntropyOrder(2.5), 1.0), DomainError);
}

TEST_CASE("SIC distorted statistics obey the inefficiency bound") {
    RandomStream rng(2, 2);
    for (std::size_t d : {2u, 3u}) {
        const auto sic = builtin_sic(d);
        for (int t = 0; t < 1000; ++t) {
            const auto rho = random_state(d, rng);
            const auto p = probabilities(sic, rho);
            const double pur = purity(rho);
            for (double eta : {0.3, 0.8}) {
                const auto q = values(distort(p, eta));
                for (double a : {0.5, 1.0, 2.0}) {
                    CHECK(oracle::tsallis(q, a) >=
                          sic_tsallis_bound_inefficiency(d, EntropyOrder(a), pur, eta) - 1e-10);
                }
            }
        }
    }
}

TEST_CASE("SIC Renyi bound") {
    for (std::size_t d : {2u, 3u}) {
        const double dd = double(d);
        CHECK(sic_renyi_bound(d, EntropyOrder(2.0), 0.6) ==
              doctest::Approx(std::log(dd * (dd + 1) / 1.6)).epsilon(1e-14));
        CHECK(sic_renyi_bound(d, EntropyOrder(2.0), 1.0 / dd) ==
              doctest::Approx(std::log(dd * dd)).epsilon(1e-14));
        const double inf1 = sic_renyi_bound(d, EntropyOrder::infinity(), 1.0);
        CHECK(inf1 == doctest::Approx(0.5 * std::log(dd * (dd + 1) / 2)).epsilon(1e-14));
        CHECK(inf1 < std::log(dd));
    }
    CHECK_THROWS_AS((void)sic_renyi_bound(3, EntropyOrder(1.0), 1.0), DomainError);
}

TEST_CASE("SIC min-entropy bound") {
    for (std::size_t d : {2u, 3u}) {
        const double dd = double(d);
        CHECK(sic_minentropy_bound(d, 1.0) == doctest::Approx(std::log(dd)).epsilon(1e-14));
        CHECK(sic_minentropy_bound(d, 1.0 / dd) == doctest::Approx(2 * std::log(dd)).epsilon(1e-14));
        const auto sic = builtin_sic(d);
        for (const auto &k : sic.kets()) {
            const auto p = probabilities(sic, DensityMatrix::pure(k));
            CHECK(std::abs(renyi(p, EntropyOrder::infinity()) - std::log(dd)) <= 1e-12);
        }
    }
    CHECK(sic_minentropy_bound(2, 0.68) ==
          doctest::Approx(2 * std::log(2.0) - std::log(1.6)).epsilon(1e-14));
}

TEST_CASE("simple SIC bounds from the largest probability") {
    for (std::size_t d : {2u, 3u}) {
        const double dd = double(d);
        const auto sic = builtin_sic(d);
        const auto u = probabilities(sic, DensityMatrix::maximally_mixed(d));
        const auto rt = simple_bounds(u, d, EntropyOrder(0.5), EntropyKind::tsallis);
        CHECK(rt.entropy.rhs == doctest::Approx(oracle::ln_a(dd * dd, 0.5)).epsilon(1e-13));
        const auto rr = simple_bounds(u, d, EntropyOrder(3.0), EntropyKind::renyi);
        CHECK(rr.entropy.rhs == doctest::Approx(2 * std::log(dd)).epsilon(1e-13));

        const auto f = probabilities(sic, DensityMatrix::pure(sic.kets()[0]));
        const auto ft = simple_bounds(f, d, EntropyOrder(0.5), EntropyKind::tsallis);
        CHECK(ft.entropy.rhs == doctest::Approx(oracle::ln_a(dd, 0.5)).epsilon(1e-12));
        CHECK(ft.dimension.saturated);

        RandomStream rng(4, d);
        for (int t = 0; t < 1000; ++t) {
            const auto p = probabilities(sic, random_state(d, rng));
            for (double a : {0.5, 3.0}) {
                for (auto kind : {EntropyKind::tsallis, EntropyKind::renyi}) {
                    const auto r = simple_bounds(p, d, EntropyOrder(a), kind);
                    CHECK(r.entropy.passed());
                    CHECK(r.dimension.passed());
                }
            }
        }
    }
    CHECK_THROWS_AS(
        (void)simple_bounds(ProbDist::from_values({0.7, 0.1, 0.1, 0.1}), 2, EntropyOrder(2.0),
                            EntropyKind::renyi),
        PreconditionError);
}

TEST_CASE("Maassen-Uffink factor g") {
    const auto mubs = mub_construct(2, 3);
    const auto z = RankOnePovm::from_basis(mubs.bases()[0]);
    const auto x = RankOnePovm::from_basis(mubs.bases()[1]);
    const auto half = DensityMatrix::maximally_mixed(2);
    // Oracle: exhaustive pair evaluation, |<m|n>|^2 (1/2) / sqrt(1/4) = 1/2.
    CHECK(mu_g_factor(z, x, half) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mu_overlap_bound(z, x) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    RandomStream rng(6, 0);
    const auto diag = DensityMatrix::from_matrix(ComplexMatrix{{0.3, 0.0}, {0.0, 0.7}});
    CHECK(mu_g_factor(z, z, diag) == doctest::Approx(1.0).epsilon(1e-15));

    for (std::size_t d : {2u, 3u}) {
        const auto m = RankOnePovm::from_sic(builtin_sic(d));
        const auto n = rotated_sic(d, 99);
        const double fbar = mu_overlap_bound(m, n);
        CHECK(fbar <= 1.0 / double(d) + 1e-12);
        for (int t = 0; t < 200; ++t) {
            CHECK(mu_g_factor(m, n, random_state(d, rng)) <= fbar + 1e-12);
        }
    }
}

TEST_CASE("Maassen-Uffink pair bounds") {
    RandomStream rng(7, 0);
    const auto m = RankOnePovm::from_sic(builtin_sic(2));
    const auto n = rotated_sic(2, 1234);
    for (int t = 0; t < 1000; ++t) {
        const auto rho = random_pure(2, rng);
        for (double s : {0.0, 0.5}) {
            const SymOrderPair o(s);
            const auto r = mu_pair_bounds(m, n, rho, o.alpha(), o.beta());
            CHECK(r.tsallis.margin >= -1e-12);
            CHECK(r.renyi.margin >= -1e-12);
            CHECK(r.tsallis_fbar.rhs <= r.tsallis.rhs + 1e-12);
            CHECK(r.renyi_fbar.rhs <= r.renyi.rhs + 1e-12);
            if (s == 0.0) {
                CHECK(r.renyi.rhs == doctest::Approx(-2 * std::log(r.g)).epsilon(1e-14));
                CHECK(r.tsallis.rhs == doctest::Approx(r.renyi.rhs).epsilon(1e-14));
            }
        }
    }
    CHECK_THROWS_AS((void)mu_pair_bounds(m, n, DensityMatrix::maximally_mixed(2), EntropyOrder(2.0),
                                         EntropyOrder(2.0)),
                    DomainError);
}

TEST_CASE("Riesz transformation is a contraction") {
    RandomStream rng(8, 0);
    for (std::size_t d : {2u, 3u}) {
        const auto m = RankOnePovm::from_sic(builtin_sic(d));
        const auto n = rotated_sic(d, 5);
        const auto rho = random_mixed(d, d, rng);
        const auto t = riesz_transform(m, n, rho);
        const auto pn = probabilities(n, rho);
        ComplexVector u(pn.size());
        for (std::size_t j = 0; j < pn.size(); ++j) u[j] = std::sqrt(pn[j]);
        const auto v = t * u;
        const auto pm = probabilities(m, rho);
        for (std::size_t i = 0; i < pm.size(); ++i) {
            CHECK(std::abs(v[i] - Complex(std::sqrt(pm[i]))) < 1e-12);
        }
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));

        const auto zero = riesz_precondition_check(m, n, rho, ComplexVector(n.size()), 0, rng);
        CHECK(zero.lhs == 0.0);
        CHECK(zero.passed());

        for (int trial = 0; trial < 100; ++trial) {
            const auto r = riesz_precondition_check(m, n, random_state(d, rng), u, 10, rng);
            CHECK(r.margin >= -1e-12);
        }
    }
}

TEST_CASE("report conventions") {
    const auto lo = make_report("x", Relation::lower_bound, 1.0, 0.5, 1e-10);
    CHECK(lo.margin == 0.5);
    CHECK(lo.passed());
    CHECK_FALSE(lo.saturated);
    const auto up = make_report("x", Relation::upper_bound, 1.0, 0.5, 1e-10);
    CHECK(up.margin == -0.5);
    CHECK_FALSE(up.passed());
    const auto eq = make_report("x", Relation::equality, 1.0, 1.0 + 1e-12, 1e-10);
    CHECK(eq.passed());
    CHECK(eq.saturated);
    const auto eq_bad = make_report("x", Relation::equality, 1.0, 0.9, 1e-10);
    CHECK_FALSE(eq_bad.passed());
}
