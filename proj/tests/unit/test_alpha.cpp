#include <doctest.h>

#include "naive_oracles.hpp"
#include "pvc/alpha.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/generators.hpp"

using namespace pvc;

TEST_CASE("alpha of the full covering family is 1") {
    for (int m : {1, 2, 3, 4}) {
        const AlphaReport rep = alpha_of(full_covering_family(Universe(m)));
        CHECK(rep.alpha == Rational(1));
    }
}

TEST_CASE("alpha of the bundle range at m=2 is 1/2") {
    const AlphaReport rep = alpha_of(bundle_range(Universe(2)));
    CHECK(rep.alpha == Rational(1, 2));
    REQUIRE(rep.worst_s.has_value());
    // Worst case: the two items split across the bidders.
    CHECK(rep.worst_s->side1().count() == 1);
    CHECK(rep.worst_s->side2().count() == 1);
}

TEST_CASE("alpha of the lone empty partition is 0") {
    const Universe u(2);
    PartitionFamily r(u);
    r.add(Partition(u, ItemSet{}, ItemSet{}));
    CHECK(alpha_of(r).alpha == Rational(0));
    CHECK_THROWS_AS(alpha_of(PartitionFamily(u)), EmptyFamilyError);
}

TEST_CASE("exact alpha matches the naive oracle") {
    Rng rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        const Universe u(1 + static_cast<int>(rng.below(5)));
        const PartitionFamily r = random_family(u, 1 + rng.below(8), rng);
        const auto [num, den] = oracle::alpha_exact(oracle::to_naive(r), u.size());
        CHECK(alpha_of(r).alpha == Rational(num, den));
    }
}

TEST_CASE("alpha report invariants") {
    Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        const PartitionFamily r = random_family(u, 1 + rng.below(8), rng);
        const AlphaReport rep = alpha_of(r);
        REQUIRE(rep.worst_s.has_value());
        const Partition& s = *rep.worst_s;
        const int den = s.support().count();
        REQUIRE(den > 0);
        // The cited entry attains the reported value against the worst S.
        const int overlap = (s.side1() & r[rep.best_t_index].side1()).count() +
                            (s.side2() & r[rep.best_t_index].side2()).count();
        CHECK(Rational(overlap, den) == rep.alpha);
        for (const Partition& t : r) {
            const int other = (s.side1() & t.side1()).count() +
                              (s.side2() & t.side2()).count();
            CHECK(other <= overlap);
        }
    }
}

TEST_CASE("sampled alpha upper-bounds exact alpha") {
    Rng seeds(73);
    const Universe u(5);
    const PartitionFamily r = random_family(u, 6, seeds);
    const Rational exact = alpha_of(r).alpha;
    for (int s = 0; s < 50; ++s) {
        const AlphaReport sampled =
            alpha_of(r, AlphaMode::Sampled, 40, seeds.next_u64());
        CHECK(sampled.alpha >= exact);
        CHECK(sampled.mode == AlphaMode::Sampled);
        CHECK(sampled.samples == 40);
    }
}

TEST_CASE("sampled alpha is deterministic under its seed") {
    const Universe u(6);
    Rng rng(79);
    const PartitionFamily r = random_family(u, 10, rng);
    const AlphaReport a = alpha_of(r, AlphaMode::Sampled, 200, 12345);
    const AlphaReport b = alpha_of(r, AlphaMode::Sampled, 200, 12345);
    CHECK(a.alpha == b.alpha);
    CHECK(a.worst_s == b.worst_s);
    CHECK(a.best_t_index == b.best_t_index);
}

TEST_CASE("exact alpha respects the enumeration budget") {
    Budget tiny;
    tiny.max_pow3_m = 2;
    CHECK_THROWS_AS(alpha_of(bundle_range(Universe(3)), AlphaMode::Exact, 0, 0, tiny),
                    BudgetExceededError);
}
