#include <doctest.h>

#include <cmath>

#include "naive_oracles.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/generators.hpp"
#include "pvc/shatter.hpp"

using namespace pvc;

namespace {

PartitionFamily bundle2(Universe u) { return bundle_range(u); }

}  // namespace

TEST_CASE("is_shattered: full covering family shatters everything") {
    const Universe u(2);
    const PartitionFamily r = full_covering_family(u);
    const ShatterReport rep = is_shattered(r, ItemSet{0, 1});
    CHECK(rep.shattered);
    REQUIRE(rep.witnesses.size() == 4);
    for (const auto& [partition, index] : rep.witnesses) {
        CHECK(project(r[index], ItemSet{0, 1}) == partition);
        CHECK(partition.support() == ItemSet{0, 1});
    }
}

TEST_CASE("is_shattered: bundle range shatters singles, never pairs") {
    const Universe u(4);
    const PartitionFamily r = bundle2(u);
    for (int j = 0; j < 4; ++j) {
        CHECK(is_shattered(r, ItemSet{j}).shattered);
    }
    CHECK_FALSE(is_shattered(r, ItemSet{1, 3}).shattered);
}

TEST_CASE("is_shattered: empty target") {
    const Universe u(3);
    PartitionFamily r(u);
    r.add(Partition(u, ItemSet{}, ItemSet{}));
    CHECK(is_shattered(r, ItemSet{}).shattered);
    CHECK_FALSE(is_shattered(PartitionFamily(u), ItemSet{}).shattered);

    Budget tiny;
    tiny.max_subset_size = 1;
    CHECK_THROWS_AS(is_shattered(r, ItemSet{0, 1}, tiny), BudgetExceededError);
}

TEST_CASE("vc_dimension on the named families") {
    CHECK(vc_dimension(full_covering_family(Universe(3))).dimension == 3);
    CHECK(vc_dimension(bundle2(Universe(4))).dimension == 1);

    const Universe u(2);
    PartitionFamily trivial(u);
    trivial.add(Partition(u, ItemSet{}, ItemSet{}));
    const VcReport rep = vc_dimension(trivial);
    CHECK(rep.dimension == 0);
    CHECK(rep.witness_set.empty());

    CHECK_THROWS_AS(vc_dimension(PartitionFamily(u)), EmptyFamilyError);
}

TEST_CASE("vc witness set is shattered and maximal") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(5)));
        const PartitionFamily r =
            random_family(u, 1 + static_cast<std::size_t>(rng.below(10)), rng);
        const VcReport rep = vc_dimension(r);
        CHECK(rep.witness_set.count() == rep.dimension);
        CHECK(is_shattered(r, rep.witness_set).shattered);
        CHECK(rep.dimension == oracle::vc_dimension(oracle::to_naive(r), u.size()));
    }
}

TEST_CASE("shattering is monotone under taking subsets") {
    Rng rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        const PartitionFamily r =
            random_family(u, 1 + static_cast<std::size_t>(rng.below(10)), rng);
        const std::uint64_t e = rng.next_u64() & u.full_mask();
        if (!is_shattered(r, ItemSet(e)).shattered) continue;
        const std::uint64_t sub = e & rng.next_u64();
        CHECK(is_shattered(r, ItemSet(sub)).shattered);
    }
}

TEST_CASE("vc is monotone in the family") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        PartitionFamily small = random_family(u, 1 + rng.below(6), rng);
        PartitionFamily big = small;
        for (const Partition& p : random_family(u, 1 + rng.below(6), rng)) big.add(p);
        CHECK(vc_dimension(small).dimension <= vc_dimension(big).dimension);
    }
}

TEST_CASE("classical_vc on the named families") {
    const Universe u(3);
    SetFamily all(u);
    for (std::uint64_t s = 0; s < 8; ++s) all.add(ItemSet(s));
    CHECK(classical_vc(all).dimension == 3);

    SetFamily two(u);
    two.add(ItemSet{0});
    two.add(ItemSet{1});
    CHECK(classical_vc(two).dimension == 1);

    SetFamily lone(u);
    lone.add(ItemSet{});
    CHECK(classical_vc(lone).dimension == 0);
}

TEST_CASE("classical_vc agrees with the naive oracle") {
    Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        const SetFamily z = random_set_family(u, 1 + rng.below(10), rng);
        std::vector<oracle::Side> naive;
        for (ItemSet s : z.entries()) naive.push_back(oracle::to_naive(s));
        CHECK(classical_vc(z).dimension == oracle::classical_vc(naive, u.size()));
    }
}

TEST_CASE("sauer_shelah_check") {
    const Universe u(3);
    SetFamily all(u);
    for (std::uint64_t s = 0; s < 8; ++s) all.add(ItemSet(s));
    CHECK(distinct_count(all) == 8);
    CHECK(classical_vc(all).dimension == 3);
    CHECK(sauer_shelah_check(all, 1));

    SetFamily tiny(u);
    tiny.add(ItemSet{0});
    CHECK(sauer_shelah_check(tiny, 1));  // vacuous: 1 <= 1 + 3

    Rng rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        const Universe u8(8);
        const SetFamily z = random_set_family(u8, 1 + rng.below(60), rng);
        CHECK(sauer_shelah_check(z, 2));
    }
}

TEST_CASE("count_shattered_sets") {
    const Universe u2(2);
    CHECK(count_shattered_sets(full_covering_family(u2)) == 4);

    PartitionFamily lone(u2);
    lone.add(Partition(u2, ItemSet{}, ItemSet{}));
    CHECK(count_shattered_sets(lone) == 1);

    CHECK(count_shattered_sets(bundle2(Universe(3))) == 4);  // empty set + singletons
    CHECK(count_shattered_sets(PartitionFamily(u2)) == 0);
}

TEST_CASE("count_shattered_sets >= 2^vc and matches the oracle") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        const PartitionFamily r = random_family(u, 1 + rng.below(10), rng);
        const std::uint64_t count = count_shattered_sets(r);
        CHECK(count == static_cast<std::uint64_t>(
                           oracle::count_shattered(oracle::to_naive(r), u.size())));
        CHECK(count >= (std::uint64_t{1} << vc_dimension(r).dimension));
    }
}

TEST_CASE("counting consequence: many shattered sets force a high dimension") {
    Rng rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        const PartitionFamily r = random_family(u, 1 + rng.below(12), rng);
        const std::uint64_t count = count_shattered_sets(r);
        const int vc = vc_dimension(r).dimension;
        for (int d = 0; d < u.size(); ++d) {
            std::uint64_t bound = 0;
            for (int i = 0; i <= d; ++i) bound += binomial(u.size(), i);
            if (count > bound) CHECK(vc >= d + 1);
        }
    }
}

TEST_CASE("covering_vc_lower_bound") {
    const CoveringVcBound full = covering_vc_lower_bound(full_covering_family(Universe(3)));
    CHECK(full.vc == 3);
    CHECK(full.log_ratio == doctest::Approx(std::log(8.0) / std::log(3.0)));

    const CoveringVcBound bundle = covering_vc_lower_bound(bundle2(Universe(4)));
    CHECK(bundle.vc == 1);
    CHECK(bundle.log_ratio == doctest::Approx(0.5));

    PartitionFamily bad(Universe(2));
    bad.add(Partition(Universe(2), ItemSet{0}, ItemSet{}));
    CHECK_THROWS_AS(covering_vc_lower_bound(bad), NotCoveringError);
}

TEST_CASE("partition vc dominates classical side1 vc on covering families") {
    Rng rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        const Universe u(2 + static_cast<int>(rng.below(4)));
        const PartitionFamily r = random_covering_family(u, 1 + rng.below(12), rng);
        const CoveringVcBound b = covering_vc_lower_bound(r);
        CHECK(b.vc >= b.classical_side1_vc);
    }
}
