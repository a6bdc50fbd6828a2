#include <doctest.h>

#include "naive_oracles.hpp"
#include "pvc/alpha.hpp"
#include "pvc/auction.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/generators.hpp"
#include "pvc/shatter.hpp"

using namespace pvc;

TEST_CASE("bundle range worst disjoint 0/1 ratio is 1/2 at m=2") {
    const RatioReport rep =
        measure_ratio(bundle_range(Universe(2)), ProfileSpace::DisjointZeroOne);
    CHECK(rep.worst == Rational(1, 2));
    CHECK(rep.witness_v1.count() == 1);
    CHECK(rep.witness_v2.count() == 1);
    CHECK(rep.profiles_evaluated == 8);
}

TEST_CASE("full covering range is exact on every profile") {
    for (ProfileSpace space :
         {ProfileSpace::DisjointZeroOne, ProfileSpace::UnrestrictedZeroOne}) {
        const RatioReport rep = measure_ratio(full_covering_family(Universe(3)), space);
        CHECK(rep.worst == Rational(1));
    }
}

TEST_CASE("worst disjoint ratio equals alpha, computed independently") {
    Rng rng(127);
    for (int trial = 0; trial < 20; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        const PartitionFamily range = random_family(u, 1 + rng.below(10), rng);
        const RatioReport ratio = measure_ratio(range, ProfileSpace::DisjointZeroOne);
        const AlphaReport alpha = alpha_of(range);
        CHECK(ratio.worst == alpha.alpha);
    }
}

TEST_CASE("sampled ratio is reproducible and bounded below by the exact one") {
    const Universe u(4);
    Rng rng(131);
    const PartitionFamily range = random_family(u, 6, rng);
    const RatioReport exact = measure_ratio(range, ProfileSpace::DisjointZeroOne);
    const RatioReport a =
        measure_ratio(range, ProfileSpace::DisjointZeroOne, RatioMode::Sampled, 64, 5);
    const RatioReport b =
        measure_ratio(range, ProfileSpace::DisjointZeroOne, RatioMode::Sampled, 64, 5);
    CHECK(a.worst == b.worst);
    CHECK(a.witness_v1 == b.witness_v1);
    CHECK(a.worst >= exact.worst);
}

TEST_CASE("lift_valuation maps items and preserves caps") {
    const Universe small(2), big(6);
    const Valuation adds(small, AdditiveValuation{{7, 4}});
    const Valuation lifted = lift_valuation(adds, {1, 4}, big);
    const auto* got = std::get_if<AdditiveValuation>(&lifted.concrete());
    REQUIRE(got != nullptr);
    CHECK(got->per_item == std::vector<std::int64_t>{0, 7, 0, 0, 4, 0});
    CHECK(lifted.value(ItemSet{0, 2, 3, 5}) == 0);

    const Valuation capped(
        small, CappedAdditiveValuation{AdditiveValuation{{7, 4}}, 5});
    const Valuation lifted_cap = lift_valuation(capped, {1, 4}, big);
    CHECK(lifted_cap.value(ItemSet{1, 4}) == 5);
    CHECK(lifted_cap.value(ItemSet{4}) == 4);

    CHECK_THROWS_AS(lift_valuation(adds, {1, 1}, big), InvalidEmbeddingError);
    CHECK_THROWS_AS(lift_valuation(adds, {1, 9}, big), InvalidEmbeddingError);
    CHECK_THROWS_AS(lift_valuation(adds, {1}, big), InvalidEmbeddingError);
}

TEST_CASE("lifted values equal small values on pulled-back bundles") {
    Rng rng(137);
    const Universe small(3), big(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Valuation v = random_capped_valuation(small, 6, 11, rng);
        std::vector<int> embed = {6, 2, 4};
        const Valuation lifted = lift_valuation(v, embed, big);
        for (std::uint64_t s = 0; s < 8; ++s) {
            std::uint64_t image = 0;
            for (int i = 0; i < 3; ++i) {
                if ((s >> i) & 1u) image |= std::uint64_t{1} << embed[static_cast<std::size_t>(i)];
            }
            // Junk outside the image never adds value.
            CHECK(lifted.value(ItemSet(image | 0b0001)) == v.value(ItemSet(s)));
        }
    }
}

TEST_CASE("widening the profile space can only lower the worst ratio") {
    Rng rng(193);
    for (int trial = 0; trial < 12; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(3)));
        const PartitionFamily range = random_family(u, 1 + rng.below(8), rng);
        const RatioReport disjoint = measure_ratio(range, ProfileSpace::DisjointZeroOne);
        const RatioReport unrestricted =
            measure_ratio(range, ProfileSpace::UnrestrictedZeroOne);
        CHECK(unrestricted.worst <= disjoint.worst);
        CHECK(unrestricted.profiles_evaluated ==
              (std::uint64_t{1} << (2 * u.size())) - 1);
    }
}

TEST_CASE("lift_valuation covers every concrete class") {
    const Universe small(2), big(5);
    const std::vector<int> embed = {3, 0};

    const Valuation zero_one(small, ZeroOneAdditiveValuation{ItemSet{0, 1}});
    const Valuation lifted_01 = lift_valuation(zero_one, embed, big);
    CHECK(lifted_01.value(ItemSet{0, 3}) == 2);
    CHECK(lifted_01.value(ItemSet{1, 2, 4}) == 0);

    const Valuation table(small, TableValuation{{0, 2, 3, 4}});
    const Valuation lifted_table = lift_valuation(table, embed, big);
    CHECK(lifted_table.value(ItemSet{3}) == 2);   // small item 0
    CHECK(lifted_table.value(ItemSet{0}) == 3);   // small item 1
    CHECK(lifted_table.value(ItemSet{0, 3}) == 4);
    CHECK(lifted_table.value(ItemSet{1, 2, 4}) == 0);

    DoubleCappedAdditiveValuation dc;
    dc.blocks = {ItemSet{0}, ItemSet{1}};
    dc.base.per_item = {4, 6};
    dc.block_caps = {3, 6};
    dc.global_cap = 8;
    const Valuation lifted_dc = lift_valuation(Valuation(small, dc), embed, big);
    CHECK(lifted_dc.value(ItemSet{3}) == 3);      // block cap of small item 0
    CHECK(lifted_dc.value(ItemSet{0}) == 6);
    CHECK(lifted_dc.value(ItemSet{0, 3}) == 8);   // global cap
    CHECK(lifted_dc.value(ItemSet{1, 2, 4}) == 0);

    // Pulled-back equality holds for every class on every bundle.
    for (const Valuation* v : {&zero_one, &table}) {
        const Valuation lifted = lift_valuation(*v, embed, big);
        for (std::uint64_t s = 0; s < 4; ++s) {
            std::uint64_t image = 0;
            for (int i = 0; i < 2; ++i) {
                if ((s >> i) & 1u) image |= std::uint64_t{1} << embed[static_cast<std::size_t>(i)];
            }
            CHECK(lifted.value(ItemSet(image)) == v->value(ItemSet(s)));
        }
    }
}

TEST_CASE("run_reduction recovers the small optimum through C(U)") {
    const Universe u(3);
    Rng rng(139);
    const AuctionInstance small_inst(u, random_capped_valuation(u, 5, 9, rng),
                                     random_capped_valuation(u, 5, 9, rng));
    const ReductionReport rep = run_reduction(full_covering_family(u),
                                              ItemSet(u.full_mask()), small_inst);
    CHECK(rep.projected_welfare == rep.small_opt);
}

TEST_CASE("run_reduction on planted ranges, and its failure modes") {
    Rng rng(149);
    const Universe big(8), small(3);
    for (int trial = 0; trial < 15; ++trial) {
        std::uint64_t e_mask = 0;
        while (std::popcount(e_mask) < 3) e_mask |= std::uint64_t{1} << rng.below(8);
        const ItemSet e(e_mask);
        const PartitionFamily range = planted_shattered_range(big, e, rng.below(20), rng);
        REQUIRE(is_shattered(range, e).shattered);
        const AuctionInstance small_inst(small, random_capped_valuation(small, 9, 18, rng),
                                         random_capped_valuation(small, 9, 18, rng));
        const ReductionReport rep = run_reduction(range, e, small_inst);
        CHECK(rep.projected_welfare == rep.small_opt);
        CHECK(rep.small_allocation.universe().size() == 3);
    }

    const AuctionInstance any(small, zero_valuation(small), zero_valuation(small));
    CHECK_THROWS_AS(run_reduction(bundle_range(big), ItemSet{0, 1, 2}, any),
                    NotShatteredError);
    const Universe wrong(2);
    const AuctionInstance mismatched(wrong, zero_valuation(wrong), zero_valuation(wrong));
    CHECK_THROWS_AS(
        run_reduction(full_covering_family(big, Budget{}), ItemSet{0, 1, 2}, mismatched),
        InvalidEmbeddingError);
}
