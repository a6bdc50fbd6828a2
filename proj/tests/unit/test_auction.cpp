#include <doctest.h>

#include "pvc/auction.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/generators.hpp"

using namespace pvc;

namespace {

Valuation capped(Universe u, std::vector<std::int64_t> per_item, std::int64_t cap) {
    return Valuation(u, CappedAdditiveValuation{AdditiveValuation{std::move(per_item)}, cap});
}

Valuation additive(Universe u, std::vector<std::int64_t> per_item) {
    return Valuation(u, AdditiveValuation{std::move(per_item)});
}

Valuation indicator(Universe u, ItemSet items) {
    return Valuation(u, ZeroOneAdditiveValuation{items});
}

}  // namespace

TEST_CASE("welfare sums the two sides") {
    const Universe u(2);
    const AuctionInstance ones(u, indicator(u, ItemSet{0, 1}), indicator(u, ItemSet{0, 1}));
    CHECK(welfare(ones, Partition(u, ItemSet{0}, ItemSet{1})) == 2);
    CHECK(welfare(ones, Partition(u, ItemSet{}, ItemSet{})) == 0);

    const AuctionInstance capped_ones(u, capped(u, {1, 1}, 1), capped(u, {1, 1}, 1));
    CHECK(welfare(capped_ones, Partition(u, ItemSet{0, 1}, ItemSet{})) == 1);
    CHECK_THROWS_AS(welfare(ones, Partition(Universe(3), ItemSet{0}, ItemSet{})),
                    UniverseMismatchError);
}

TEST_CASE("opt_allocation brute-forces the covering optimum") {
    const Universe u(2);
    const AuctionInstance inst(u, capped(u, {1, 1}, 1), capped(u, {1, 1}, 1));
    const auto [alloc, opt] = opt_allocation(inst);
    CHECK(opt == 2);
    CHECK(is_covering(alloc));

    const AuctionInstance lopsided(u, additive(u, {2, 1}), zero_valuation(u));
    const auto [all_to_1, w] = opt_allocation(lopsided);
    CHECK(w == 3);
    CHECK(all_to_1.side1().bits() == u.full_mask());

    const AuctionInstance split(u, indicator(u, ItemSet{0}), indicator(u, ItemSet{1}));
    CHECK(opt_allocation(split).second == 2);

    Budget tiny;
    tiny.max_pow2_m = 1;
    CHECK_THROWS_AS(opt_allocation(inst, tiny), BudgetExceededError);
}

TEST_CASE("mir_allocate follows the worked examples") {
    const Universe u(2);
    PartitionFamily range(u);
    range.add(Partition(u, ItemSet{0}, ItemSet{1}));
    range.add(Partition(u, ItemSet{1}, ItemSet{0}));

    const AuctionInstance first(u, additive(u, {3, 1}), additive(u, {1, 2}));
    const Outcome a = mir_allocate(MirMechanism(range), first);
    CHECK(a.allocation == Partition(u, ItemSet{0}, ItemSet{1}));
    CHECK(a.welfare == 5);
    CHECK(a.payment1 == 0);
    CHECK(a.payment2 == 0);

    const AuctionInstance second(u, additive(u, {3, 1}), additive(u, {4, 1}));
    const Outcome b = mir_allocate(MirMechanism(range), second);
    CHECK(b.allocation == Partition(u, ItemSet{1}, ItemSet{0}));
    CHECK(b.welfare == 5);
    CHECK(b.payment1 == 0);
    CHECK(b.payment2 == 2);
}

TEST_CASE("welfare ties resolve to the lowest range index") {
    const Universe u(2);
    PartitionFamily range(u);
    range.add(Partition(u, ItemSet{0}, ItemSet{1}));  // index 0
    range.add(Partition(u, ItemSet{}, ItemSet{}));
    range.add(Partition(u, ItemSet{0, 1}, ItemSet{}));
    range.add(Partition(u, ItemSet{1}, ItemSet{0}));  // ties with index 0

    const AuctionInstance symmetric(u, indicator(u, ItemSet{0, 1}),
                                    indicator(u, ItemSet{0, 1}));
    const Outcome out = mir_allocate(MirMechanism(range), symmetric);
    CHECK(out.allocation == range[0]);

    // Scaling both valuations never moves the argmax index.
    const AuctionInstance scaled(u, additive(u, {5, 5}), additive(u, {5, 5}));
    CHECK(mir_allocate(MirMechanism(range), scaled).allocation == range[0]);
}

TEST_CASE("vcg payments against the bundle range") {
    const Universe u(2);
    const AuctionInstance inst(u, capped(u, {2, 2}, 3), additive(u, {1, 1}));
    const Outcome out = bundle_mechanism(inst);
    // v1(U)=3 beats v2(U)=2; winner pays the loser's displaced value.
    CHECK(out.allocation.side1().bits() == u.full_mask());
    CHECK(out.payment1 == 2);
    CHECK(out.payment2 == 0);

    const AuctionInstance silent(u, additive(u, {3, 0}), zero_valuation(u));
    CHECK(bundle_mechanism(silent).payment1 == 0);

    // Symmetric instance, symmetric range: swapped bidders swap payments.
    PartitionFamily range(u);
    range.add(Partition(u, ItemSet{0}, ItemSet{1}));
    range.add(Partition(u, ItemSet{1}, ItemSet{0}));
    const AuctionInstance fwd(u, additive(u, {5, 2}), additive(u, {4, 3}));
    const AuctionInstance rev(u, additive(u, {4, 3}), additive(u, {5, 2}));
    const Outcome f = mir_allocate(MirMechanism(range), fwd);
    const Outcome r = mir_allocate(MirMechanism(range), rev);
    CHECK(f.payment1 == r.payment2);
    CHECK(f.payment2 == r.payment1);

    CHECK_THROWS_AS(
        vcg_payments(range, inst, Partition(u, ItemSet{0, 1}, ItemSet{})),
        NotInRangeError);
}

TEST_CASE("mechanism construction rejects bad ranges") {
    const Universe u(2);
    CHECK_THROWS_AS(MirMechanism{PartitionFamily(u)}, EmptyRangeError);

    PartitionFamily partial(u);
    partial.add(Partition(u, ItemSet{0}, ItemSet{}));
    CHECK_THROWS_AS(MirMechanism(partial, /*allocate_all_items=*/true), NotCoveringError);
    CHECK_NOTHROW(MirMechanism{partial});
}

TEST_CASE("bundle mechanism meets the half guarantee on grids") {
    const Universe u(3);
    const std::vector<Valuation> grid = capped_valuation_grid(u, 2, 3);
    for (const Valuation& v1 : grid) {
        for (const Valuation& v2 : grid) {
            const AuctionInstance inst(u, v1, v2);
            const std::int64_t opt = opt_allocation(inst).second;
            const Outcome out = bundle_mechanism(inst);
            CHECK(2 * out.welfare >= opt);
        }
    }

    // The cap makes the bound tight.
    const Universe u2(2);
    const AuctionInstance worst(u2, capped(u2, {1, 1}, 1), capped(u2, {1, 1}, 1));
    CHECK(bundle_mechanism(worst).welfare == 1);
    CHECK(opt_allocation(worst).second == 2);

    const AuctionInstance alone(u2, additive(u2, {2, 1}), zero_valuation(u2));
    CHECK(bundle_mechanism(alone).welfare == opt_allocation(alone).second);

    const AuctionInstance tie(u2, additive(u2, {1, 1}), additive(u2, {1, 1}));
    CHECK(bundle_mechanism(tie).allocation.side1().bits() == u2.full_mask());
}

TEST_CASE("individual rationality and nonnegative payments on random runs") {
    Rng rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(3)));
        const PartitionFamily range = random_family(u, 1 + rng.below(8), rng);
        const AuctionInstance inst(u, random_capped_valuation(u, 4, 8, rng),
                                   random_capped_valuation(u, 4, 8, rng));
        const Outcome out = mir_allocate(MirMechanism(range), inst);
        CHECK(out.payment1 >= 0);
        CHECK(out.payment2 >= 0);
        CHECK(inst.v1.value(out.allocation.side1()) >= out.payment1);
        CHECK(inst.v2.value(out.allocation.side2()) >= out.payment2);
        for (const Partition& t : range) {
            CHECK(out.welfare >= welfare(inst, t));
        }
    }
}

TEST_CASE("full covering range reproduces the brute-force optimum") {
    Rng rng(113);
    for (int trial = 0; trial < 25; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(5)));
        const MirMechanism mech(full_covering_family(u), true);
        const AuctionInstance inst(u, random_capped_valuation(u, 5, 12, rng),
                                   random_capped_valuation(u, 5, 12, rng));
        CHECK(mir_allocate(mech, inst).welfare == opt_allocation(inst).second);
    }
}
