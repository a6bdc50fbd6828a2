#include <doctest.h>

#include "pvc/generators.hpp"
#include "pvc/valuation.hpp"

using namespace pvc;

TEST_CASE("valuation classes evaluate their definitions") {
    const Universe u(3);
    const Valuation add(u, AdditiveValuation{{3, 1, 2}});
    CHECK(add.value(ItemSet{}) == 0);
    CHECK(add.value(ItemSet{0, 2}) == 5);

    const Valuation capped(u, CappedAdditiveValuation{AdditiveValuation{{3, 1, 2}}, 4});
    CHECK(capped.value(ItemSet{0}) == 3);
    CHECK(capped.value(ItemSet{0, 1, 2}) == 4);

    const Valuation zero_one(u, ZeroOneAdditiveValuation{ItemSet{0, 2}});
    CHECK(zero_one.value(ItemSet{0, 1}) == 1);
    CHECK(zero_one.value(ItemSet{0, 2}) == 2);

    const Valuation table(u, TableValuation{{0, 1, 1, 2, 1, 2, 2, 3}});
    CHECK(table.value(ItemSet{1, 2}) == 2);
}

TEST_CASE("double-capped valuation applies block then global caps") {
    const Universe u(4);
    DoubleCappedAdditiveValuation v;
    v.blocks = {ItemSet{0, 1}, ItemSet{2, 3}};
    v.base.per_item = {3, 3, 2, 2};
    v.block_caps = {4, 3};
    v.global_cap = 6;
    const Valuation dc(u, v);
    CHECK(dc.value(ItemSet{0}) == 3);
    CHECK(dc.value(ItemSet{0, 1}) == 4);         // block cap binds
    CHECK(dc.value(ItemSet{0, 1, 2}) == 6);      // 4 + 2
    CHECK(dc.value(ItemSet{0, 1, 2, 3}) == 6);   // global cap binds
}

TEST_CASE("valuation construction is validated") {
    const Universe u(2);
    CHECK_THROWS_AS(Valuation(u, AdditiveValuation{{1}}), ParseError);
    CHECK_THROWS_AS(Valuation(u, AdditiveValuation{{1, -1}}), ParseError);
    CHECK_THROWS_AS(Valuation(u, CappedAdditiveValuation{AdditiveValuation{{1, 1}}, -2}),
                    ParseError);
    CHECK_THROWS_AS(Valuation(u, TableValuation{{0, 1, 1}}), ParseError);
    // 1 = v({0}) > v({0,1}) = 0 breaks monotonicity.
    CHECK_THROWS_AS(Valuation(u, TableValuation{{0, 1, 1, 0}}), ParseError);

    DoubleCappedAdditiveValuation overlapping;
    overlapping.blocks = {ItemSet{0}, ItemSet{0, 1}};
    overlapping.base.per_item = {1, 1};
    overlapping.block_caps = {1, 1};
    overlapping.global_cap = 2;
    CHECK_THROWS_AS(Valuation(u, overlapping), ParseError);

    DoubleCappedAdditiveValuation gap;
    gap.blocks = {ItemSet{0}};
    gap.base.per_item = {1, 1};
    gap.block_caps = {1};
    gap.global_cap = 2;
    CHECK_THROWS_AS(Valuation(u, gap), ParseError);
}

TEST_CASE("every class is nondecreasing, exhaustively at small m") {
    Rng rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        const Universe u(1 + static_cast<int>(rng.below(5)));
        CHECK(random_capped_valuation(u, 4, 9, rng).nondecreasing_exhaustive());
    }
    const Universe u(4);
    for (const Valuation& v : zero_one_valuation_grid(u)) {
        CHECK(v.nondecreasing_exhaustive());
    }
    DoubleCappedAdditiveValuation dc;
    dc.blocks = {ItemSet{0, 1}, ItemSet{2, 3}};
    dc.base.per_item = {3, 1, 2, 2};
    dc.block_caps = {3, 2};
    dc.global_cap = 4;
    CHECK(Valuation(u, dc).nondecreasing_exhaustive());
}

TEST_CASE("nondecreasing along random subset chains at larger m") {
    Rng rng(211);
    const Universe u(14);
    for (int trial = 0; trial < 20; ++trial) {
        const Valuation v = random_capped_valuation(u, 6, 30, rng);
        DoubleCappedAdditiveValuation raw;
        raw.blocks = {ItemSet(0x00FFu), ItemSet(0x3F00u & u.full_mask())};
        raw.base.per_item.assign(14, 2);
        raw.block_caps = {5, 7};
        raw.global_cap = 9;
        const Valuation dc(u, raw);
        // Grow a random chain one item at a time; values must never drop.
        std::uint64_t bundle = 0;
        std::int64_t last_v = v.value(ItemSet(0)), last_dc = dc.value(ItemSet(0));
        while (bundle != u.full_mask()) {
            const std::uint64_t missing = u.full_mask() & ~bundle;
            std::uint64_t skip = rng.below(static_cast<std::uint64_t>(std::popcount(missing)));
            std::uint64_t rest = missing;
            while (skip--) rest &= rest - 1;
            bundle |= rest & (~rest + 1);
            const std::int64_t now_v = v.value(ItemSet(bundle));
            const std::int64_t now_dc = dc.value(ItemSet(bundle));
            CHECK(now_v >= last_v);
            CHECK(now_dc >= last_dc);
            last_v = now_v;
            last_dc = now_dc;
        }
    }
}

TEST_CASE("to_table matches pointwise evaluation") {
    Rng rng(107);
    const Universe u(4);
    const Valuation v = random_capped_valuation(u, 3, 6, rng);
    const std::vector<std::int64_t> table = v.to_table();
    REQUIRE(table.size() == 16);
    for (std::uint64_t s = 0; s < 16; ++s) {
        CHECK(table[s] == v.value(ItemSet(s)));
    }
}

TEST_CASE("capped grid deduplicates by value table") {
    const Universe u(2);
    const std::vector<Valuation> grid = capped_valuation_grid(u, 1, 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            CHECK(grid[i].to_table() != grid[j].to_table());
        }
    }
    CHECK(grid.size() > 4);
}
