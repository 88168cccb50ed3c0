#include <doctest.h>

#include <cmath>

#include "sicmub/check_bound.hpp"
#include "sicmub/entanglement.hpp"
#include "sicmub/errors.hpp"

using namespace sicmub;

TEST_CASE("proposition labels round-trip") {
    for (const auto id : all_propositions()) {
        CHECK(parse_proposition(to_string(id)) == id);
    }
    CHECK(to_string(PropositionId::mub_tsallis) == "P1-mub-tsallis");
    CHECK(to_string(PropositionId::entanglement_g) == "ENT-G");
    CHECK_THROWS_AS((void)parse_proposition("P10"), DomainError);
}

TEST_CASE("order ranges per proposition") {
    CHECK_THROWS_AS(validate_order(PropositionId::mub_tsallis, EntropyOrder(3.0)), DomainError);
    CHECK_NOTHROW(validate_order(PropositionId::mub_tsallis, EntropyOrder(2.0)));
    CHECK_THROWS_AS(validate_order(PropositionId::sic_renyi, EntropyOrder(1.5)), DomainError);
    CHECK_NOTHROW(validate_order(PropositionId::sic_renyi, EntropyOrder::infinity()));
    CHECK_THROWS_AS(validate_order(PropositionId::mu_pair, EntropyOrder::infinity()), DomainError);
    CHECK_THROWS_AS(validate_order(PropositionId::mub_symmetrized, EntropyOrder(0.5)), DomainError);
}

TEST_CASE("saturation cases through the driver") {
    BoundParams p;
    const auto sic = MeasurementSet{builtin_sic(2)};
    const auto r8 = check_bound(sic, DensityMatrix::maximally_mixed(2),
                                PropositionId::sic_minentropy, p);
    CHECK(r8.saturated);
    CHECK(r8.passed());

    const double s = 1.0 / std::sqrt(3.0);
    p.alpha = EntropyOrder(2.0);
    const auto r2 = check_bound(MeasurementSet{mub_construct(2, 3)}, from_bloch({{s, s, s}}),
                                PropositionId::mub_renyi, p);
    CHECK(r2.label == "P2-mub-renyi");
    CHECK(r2.saturated);
    CHECK(r2.rhs == doctest::Approx(std::log(1.5)));
}

TEST_CASE("driver passes on random states") {
    RandomStream rng(1, 0);
    const MeasurementSet mubs{mub_construct(3, 4)};
    for (int t = 0; t < 200; ++t) {
        BoundParams p;
        p.alpha = EntropyOrder(1.5);
        CHECK(check_bound(mubs, random_state(3, rng), PropositionId::mub_tsallis, p).passed());
    }
}

TEST_CASE("SIC coincidence identity is an exact equality") {
    RandomStream rng(2, 0);
    const MeasurementSet sic{builtin_sic(3)};
    for (int t = 0; t < 100; ++t) {
        const auto r = check_bound(sic, random_state(3, rng), PropositionId::sic_coincidence, {});
        CHECK(r.relation == Relation::equality);
        CHECK(std::abs(r.margin) <= 1e-14);
        CHECK(r.saturated);
    }
}

TEST_CASE("kind-split labels") {
    BoundParams p;
    p.orders = SymOrderPair(0.25);
    p.kind = EntropyKind::renyi;
    const auto r = check_bound(MeasurementSet{mub_construct(5, 6)}, DensityMatrix::maximally_mixed(5),
                               PropositionId::mub_symmetrized, p);
    CHECK(r.label == "P4-mub-sym/renyi");
    CHECK(r.passed());

    BoundParams q;
    q.alpha = EntropyOrder(0.5);
    const auto rs = check_bound(MeasurementSet{builtin_sic(2)}, DensityMatrix::maximally_mixed(2),
                                PropositionId::sic_simple, q);
    CHECK(rs.label == "SIC-simple/tsallis");
}

TEST_CASE("driver rejects mismatched inputs") {
    BoundParams p;
    p.alpha = EntropyOrder(3.0);
    const MeasurementSet mubs{mub_construct(3, 4)};
    CHECK_THROWS_AS((void)check_bound(mubs, DensityMatrix::maximally_mixed(3),
                                      PropositionId::mub_tsallis, p),
                    DomainError);
    CHECK_THROWS_AS((void)check_bound(mubs, DensityMatrix::maximally_mixed(3),
                                      PropositionId::sic_minentropy, {}),
                    PreconditionError);
    CHECK_THROWS_AS((void)check_bound(mubs, DensityMatrix::maximally_mixed(2),
                                      PropositionId::mub_minentropy, {}),
                    DimensionError);
    CHECK_THROWS_AS((void)check_bound(mubs, DensityMatrix::maximally_mixed(3),
                                      PropositionId::mub_renyi, {}),
                    DomainError);
}

TEST_CASE("entanglement witness through the driver") {
    const MeasurementSet sic{builtin_sic(2)};
    BoundParams p;
    p.state_independent = true;
    const auto r = check_bound(sic, maximally_entangled(2), PropositionId::entanglement_g, p);
    CHECK_FALSE(r.passed());
    CHECK(r.lhs == doctest::Approx(0.5));
    CHECK(r.rhs == doctest::Approx(1.0 / 3.0));
    RandomStream rng(3, 0);
    for (int t = 0; t < 100; ++t) {
        const auto prod = tensor(random_state(2, rng), random_state(2, rng));
        CHECK(check_bound(sic, prod, PropositionId::entanglement_g, {}).passed());
    }
}

TEST_CASE("pair propositions") {
    const auto mubs = mub_construct(3, 2);
    const MeasurementSet pair{PovmPair{RankOnePovm::from_basis(mubs.bases()[0]),
                                       RankOnePovm::from_basis(mubs.bases()[1])}};
    RandomStream rng(4, 0);
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_state(3, rng);
        for (auto kind : {EntropyKind::tsallis, EntropyKind::renyi}) {
            BoundParams p;
            p.orders = SymOrderPair(0.5);
            p.kind = kind;
            CHECK(check_bound(pair, rho, PropositionId::mu_pair, p).passed());
            p.state_independent = true;
            CHECK(check_bound(pair, rho, PropositionId::mu_pair, p).passed());
        }
        BoundParams rz;
        rz.riesz_trials = 5;
        rz.riesz_seed = static_cast<std::uint64_t>(t);
        CHECK(check_bound(pair, rho, PropositionId::riesz, rz).passed());
        CHECK(check_bound(pair, rho, PropositionId::max_element, {}).passed());
    }
}
