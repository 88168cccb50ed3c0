#include <doctest.h>

#include <cmath>

#include "convert.hpp"
#include "sicmub/entropy.hpp"
#include "sicmub/errors.hpp"
#include "sicmub/measurements.hpp"

using namespace sicmub;

namespace {

double worst_pair_overlap_deviation(const std::vector<oracle::Vec> &kets, double target) {
    double worst = 0;
    for (std::size_t j = 0; j < kets.size(); ++j)
        for (std::size_t k = j + 1; k < kets.size(); ++k)
            worst = std::max(worst, std::abs(std::norm(oracle::dot(kets[j], kets[k])) - target));
    return worst;
}

} // namespace

TEST_CASE("SIC statistics at the maximally mixed state are uniform") {
    for (std::size_t d : {2u, 3u}) {
        const auto p = probabilities(builtin_sic(d), DensityMatrix::maximally_mixed(d));
        const double dd = static_cast<double>(d);
        for (double x : p.values()) CHECK(std::abs(x - 1.0 / (dd * dd)) < 1e-15);
    }
}

TEST_CASE("basis measurement on its own basis state is an indicator") {
    const auto mubs = mub_construct(3, 4);
    const auto &b = mubs.bases()[2];
    const auto p = probabilities(b, DensityMatrix::pure(b.vectors()[1]));
    CHECK(p[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(p[0]) < 1e-14);
    CHECK(std::abs(p[2]) < 1e-14);
}

TEST_CASE("qubit SIC on a fiducial ket gives 1/2 once and 1/6 otherwise") {
    const auto sic = builtin_sic(2);
    for (std::size_t j = 0; j < 4; ++j) {
        const auto p = probabilities(sic, DensityMatrix::pure(sic.kets()[j]));
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(std::abs(p[k] - (k == j ? 0.5 : 1.0 / 6.0)) < 1e-14);
        }
    }
}

TEST_CASE("probabilities reject mismatched dimensions") {
    CHECK_THROWS_AS((void)probabilities(builtin_sic(2), DensityMatrix::maximally_mixed(3)),
                    DimensionError);
}

TEST_CASE("qubit MUBs are the Pauli eigenbases") {
    const auto mubs = mub_construct(2, 3);
    const auto &paulis = pauli_matrices();
    // Z, X, Y order: each vector is an eigenvector of the matching Pauli.
    const std::array<std::size_t, 3> which{2, 0, 1};
    for (std::size_t m = 0; m < 3; ++m) {
        for (const auto &v : mubs.bases()[m].vectors()) {
            const auto sv = paulis[which[m]] * v;
            const Complex lambda = inner(v, sv);
            CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-14);
            CHECK(max_abs_diff(sv, lambda * v) < 1e-14);
        }
    }
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            for (const auto &u : mubs.bases()[a].vectors())
                for (const auto &v : mubs.bases()[b].vectors())
                    CHECK(std::abs(std::norm(inner(u, v)) - 0.5) < 1e-15);
}

TEST_CASE("complete MUB sets in odd prime dimensions") {
    for (std::size_t d : {3u, 5u, 7u}) {
        const auto mubs = mub_construct(d, d + 1);
        CHECK(mubs.count() == d + 1);
        std::vector<std::vector<oracle::Vec>> all;
        for (const auto &b : mubs.bases()) {
            std::vector<oracle::Vec> vs;
            for (const auto &v : b.vectors()) vs.push_back(to_oracle(v));
            all.push_back(vs);
        }
        double worst = 0;
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = 0; b < all.size(); ++b)
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t k = 0; k < d; ++k) {
                        const double o = std::norm(oracle::dot(all[a][j], all[b][k]));
                        const double target = a == b ? (j == k ? 1.0 : 0.0) : 1.0 / double(d);
                        worst = std::max(worst, std::abs(o - target));
                    }
        CHECK(worst <= 1e-12);
        CHECK(mub_deviation(mubs.bases()) <= 1e-12);
    }
}

TEST_CASE("MUB construction guards") {
    CHECK_THROWS_AS((void)mub_construct(6, 3), UnsupportedDimensionError);
    CHECK_THROWS_AS((void)mub_construct(4, 3), UnsupportedDimensionError);
    CHECK_THROWS_AS((void)mub_construct(3, 5), DomainError);
    CHECK_THROWS_AS((void)mub_construct(3, 1), DomainError);
    CHECK(mub_construct(5, 2).count() == 2);
    try {
        (void)mub_construct(6, 3);
    } catch (const UnsupportedDimensionError &e) {
        CHECK(std::string(e.what()).find("unsupported dimension") != std::string::npos);
    }
}

TEST_CASE("MubSet rejects bases that are not unbiased") {
    std::vector<OrthonormalBasis> same{OrthonormalBasis::computational(2),
                                       OrthonormalBasis::computational(2)};
    CHECK_THROWS_AS((void)MubSet::from_bases(same), ConstructionError);
}

TEST_CASE("builtin SICs have equal pairwise overlaps") {
    for (std::size_t d : {2u, 3u}) {
        const auto sic = builtin_sic(d);
        CHECK(sic.size() == d * d);
        std::vector<oracle::Vec> kets;
        for (const auto &k : sic.kets()) kets.push_back(to_oracle(k));
        CHECK(worst_pair_overlap_deviation(kets, 1.0 / double(d + 1)) <= 1e-12);
    }
}

TEST_CASE("builtin orbits follow the shift-clock convention") {
    for (std::size_t d : {2u, 3u}) {
        const auto sic = builtin_sic(d);
        const auto expected = oracle::wh_orbit(to_oracle(builtin_fiducial(d)));
        for (std::size_t j = 0; j < d * d; ++j) {
            const auto got = to_oracle(sic.kets()[j]);
            for (std::size_t k = 0; k < d; ++k) CHECK(std::abs(got[k] - expected[j][k]) < 1e-14);
        }
    }
    const auto f = to_oracle(builtin_fiducial(2));
    const auto ref = oracle::qubit_fiducial();
    CHECK(std::abs(f[0] - ref[0]) < 1e-15);
    CHECK(std::abs(f[1] - ref[1]) < 1e-15);
}

TEST_CASE("a degenerate fiducial is not a SIC") {
    CHECK_THROWS_AS((void)sic_from_fiducial(ComplexVector::basis(2, 0)), NotASicError);
    try {
        (void)sic_from_fiducial(ComplexVector::basis(2, 0));
    } catch (const NotASicError &e) {
        CHECK(e.worst_deviation() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)builtin_fiducial(5), UnsupportedDimensionError);
    CHECK_THROWS_AS((void)sic_from_fiducial(ComplexVector{1.0, 1.0}), DomainError);
}

TEST_CASE("SIC completeness consequences") {
    for (std::size_t d : {2u, 3u}) {
        const auto sic = builtin_sic(d);
        const auto id = sic_consequences_check(sic, ComplexMatrix::identity(d), sic.kets()[0]);
        CHECK(std::abs(id.double_sum - Complex(double(d))) <= 1e-12);
        CHECK(id.reconstruction_deviation < 1e-12);
        CHECK(id.passed);
    }
    RandomStream rng(5, 0);
    const auto sic = builtin_sic(3);
    for (int t = 0; t < 20; ++t) {
        ComplexMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = rng.complex_normal();
        ComplexVector psi(3);
        for (std::size_t i = 0; i < 3; ++i) psi[i] = rng.complex_normal();
        const auto r = sic_consequences_check(sic, a, psi);
        // Direct double sum oracle.
        oracle::C s = 0;
        for (const auto &ki : sic.kets())
            for (const auto &kj : sic.kets())
                s += oracle::dot(to_oracle(ki), to_oracle(a * kj)) *
                     oracle::dot(to_oracle(kj), to_oracle(ki));
        s /= 9.0;
        CHECK(std::abs(r.double_sum - s) < 1e-12);
        CHECK(r.trace_deviation < 1e-10);
        CHECK(r.reconstruction_deviation < 1e-10);
        CHECK(r.passed);
    }
}

TEST_CASE("design basis built from SIC kets is orthonormal") {
    for (std::size_t d : {2u, 3u}) {
        const auto basis = sic_design_basis(builtin_sic(d));
        REQUIRE(basis.size() == d * d);
        double worst = 0;
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const auto g = oracle::dot(to_oracle(basis[a]), to_oracle(basis[b]));
                worst = std::max(worst, std::abs(g - oracle::C(a == b ? 1.0 : 0.0)));
            }
        CHECK(worst <= (d == 2 ? 1e-12 : 1e-11));
        const double dd = double(d);
        const double phi_norm2 = (dd * dd + (dd * dd * dd * dd - dd * dd) / (dd + 1.0)) / (dd * dd * dd);
        CHECK(phi_norm2 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::norm(basis[0].norm()) == doctest::Approx(phi_norm2).epsilon(1e-13));
    }
}

TEST_CASE("detector inefficiency distortion") {
    const auto p = ProbDist::from_values({0.2, 0.3, 0.5});
    const auto one = distort(p, 1.0);
    REQUIRE(one.size() == 4);
    CHECK(one[0] == 0.2);
    CHECK(one[2] == 0.5);
    CHECK(one[3] == 0.0);
    const auto zero = distort(p, 0.0);
    CHECK(zero[3] == 1.0);
    CHECK(zero[0] == 0.0);
    CHECK_THROWS_AS((void)distort(p, 1.5), DomainError);
    CHECK_THROWS_AS((void)distort(p, -0.1), DomainError);

    RandomStream rng(77, 0);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> raw(5);
        double s = 0;
        for (auto &x : raw) s += (x = rng.uniform());
        for (auto &x : raw) x /= s;
        const auto q = ProbDist::from_values(raw);
        for (double eta : {0.3, 0.8}) {
            const auto qe = distort(q, eta);
            for (double a : {0.5, 1.0, 2.0}) {
                const double lhs = oracle::tsallis(values(qe), a);
                const double rhs = std::pow(eta, a) * oracle::tsallis(raw, a) +
                                   oracle::tsallis({eta, 1.0 - eta}, a);
                CHECK(std::abs(lhs - rhs) <= 1e-12);
            }
        }
    }
}

TEST_CASE("probability vectors are validated") {
    CHECK_THROWS_AS((void)ProbDist::from_values({0.5, 0.6}), DomainError);
    CHECK_THROWS_AS((void)ProbDist::from_values({1.1, -0.1}), DomainError);
    const auto p = ProbDist::from_values({1.0 + 1e-15, -1e-15});
    CHECK(p[1] == 0.0);
}

TEST_CASE("rank-one POVM views") {
    const auto sic = builtin_sic(3);
    const auto r1 = RankOnePovm::from_sic(sic);
    CHECK(r1.size() == 9);
    for (const auto &m : r1.vectors()) CHECK(m.norm() == doctest::Approx(1.0 / std::sqrt(3.0)));
    const auto from_povm = RankOnePovm::from_povm(sic.as_povm());
    RandomStream rng(3, 3);
    const auto rho = random_state(3, rng);
    const auto a = probabilities(r1, rho);
    const auto b = probabilities(from_povm, rho);
    const auto c = probabilities(sic, rho);
    for (std::size_t j = 0; j < 9; ++j) {
        CHECK(std::abs(a[j] - c[j]) < 1e-14);
        CHECK(std::abs(b[j] - c[j]) < 1e-12);
    }
    std::vector<ComplexMatrix> rank2{ComplexMatrix::identity(2)};
    CHECK_THROWS_AS((void)RankOnePovm::from_povm(Povm::from_elements(rank2)), PreconditionError);
    CHECK_THROWS_AS((void)Povm::from_elements({0.5 * ComplexMatrix::identity(2)}),
                    ConstructionError);
}

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(13));
}
