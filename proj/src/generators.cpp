#include "pvc/generators.hpp"

#include <map>

#include "pvc/codes.hpp"
#include "pvc/enumerate.hpp"

namespace pvc {

PartitionFamily random_family(Universe u, std::size_t size, Rng& rng) {
    PartitionFamily out(u);
    for (std::size_t n = 0; n < size; ++n) {
        std::uint64_t s1 = 0, s2 = 0;
        for (int i = 0; i < u.size(); ++i) {
            switch (rng.below(3)) {
                case 1: s1 |= std::uint64_t{1} << i; break;
                case 2: s2 |= std::uint64_t{1} << i; break;
                default: break;
            }
        }
        out.add(Partition(u, ItemSet(s1), ItemSet(s2)));
    }
    return out;
}

PartitionFamily random_covering_family(Universe u, std::size_t size, Rng& rng) {
    PartitionFamily out(u);
    for (std::size_t n = 0; n < size; ++n) out.add(sample_covering_partition(u, rng));
    return out;
}

SetFamily random_set_family(Universe u, std::size_t size, Rng& rng) {
    SetFamily out(u);
    for (std::size_t n = 0; n < size; ++n) {
        out.add(ItemSet(rng.next_u64() & u.full_mask()));
    }
    return out;
}

SetFamily all_k_subsets(Universe u, int k) {
    SetFamily out(u);
    const std::uint64_t total = binomial(u.size(), k);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        out.add(ItemSet(subset_unrank(u.size(), k, rank)));
    }
    return out;
}

Valuation random_capped_valuation(Universe u, std::int64_t max_item, std::int64_t max_cap,
                                  Rng& rng) {
    AdditiveValuation base;
    base.per_item.reserve(static_cast<std::size_t>(u.size()));
    for (int i = 0; i < u.size(); ++i) {
        base.per_item.push_back(
            static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_item + 1))));
    }
    const std::int64_t cap =
        static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_cap + 1)));
    return Valuation(u, CappedAdditiveValuation{std::move(base), cap});
}

PartitionFamily greedy_far_covering_family(Universe u, int min_distance,
                                           std::size_t target, std::uint64_t attempts,
                                           Rng& rng) {
    PartitionFamily out(u);
    for (std::uint64_t n = 0; n < attempts && out.size() < target; ++n) {
        const Partition candidate = sample_covering_partition(u, rng);
        bool ok = true;
        for (const Partition& kept : out) {
            if (distance(kept, candidate) < min_distance) {
                ok = false;
                break;
            }
        }
        if (ok) out.add(candidate);
    }
    return out;
}

PartitionFamily planted_shattered_range(Universe u, ItemSet e, std::size_t noise,
                                        Rng& rng) {
    require_within(e, u, "planted target");
    PartitionFamily out(u);
    const std::uint64_t outside = u.full_mask() & ~e.bits();
    for (const Partition& c : enumerate_covering_partitions(u, e)) {
        std::uint64_t x1 = 0, x2 = 0;
        for (std::uint64_t b = outside; b != 0; b &= b - 1) {
            const std::uint64_t bit = b & (~b + 1);
            switch (rng.below(3)) {
                case 1: x1 |= bit; break;
                case 2: x2 |= bit; break;
                default: break;
            }
        }
        out.add(Partition(u, ItemSet(c.side1().bits() | x1), ItemSet(c.side2().bits() | x2)));
    }
    for (const Partition& p : random_family(u, noise, rng)) out.add(p);
    return out;
}

PartitionFamily planted_block_shattered_range(const BlockDesign& design, std::size_t noise,
                                              Rng& rng) {
    const Universe u = design.universe;
    const int q = static_cast<int>(design.blocks.size());
    const int l = design.block_size;
    const int side1_size = q * l;

    ItemSet in_blocks;
    for (ItemSet b : design.blocks) in_blocks = in_blocks | b;
    const std::vector<int> leftover = (ItemSet(u.full_mask()) - in_blocks).items();
    if (leftover.size() < static_cast<std::size_t>(side1_size)) {
        throw InfeasibleDesignError("planting needs at least q*l items outside the blocks");
    }

    PartitionFamily out(u);
    // One witness per f: side1 takes one item from each selected block and
    // pads from the leftovers to the regular size q*l.
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << q); ++f) {
        std::uint64_t side1 = 0;
        int taken = 0;
        for (int j = 0; j < q; ++j) {
            if ((f >> j) & 1u) {
                const std::vector<int> items = design.blocks[static_cast<std::size_t>(j)].items();
                side1 |= std::uint64_t{1}
                         << items[static_cast<std::size_t>(rng.below(items.size()))];
                ++taken;
            }
        }
        for (int pad = 0; pad < side1_size - taken; ++pad) {
            side1 |= std::uint64_t{1} << leftover[static_cast<std::size_t>(pad)];
        }
        out.add(Partition(u, ItemSet(side1), ItemSet(u.full_mask() & ~side1)));
    }
    // Noise keeps the side1 family regular: random side1 of the same size.
    std::vector<int> all_items(static_cast<std::size_t>(u.size()));
    for (int i = 0; i < u.size(); ++i) all_items[static_cast<std::size_t>(i)] = i;
    for (std::size_t n = 0; n < noise; ++n) {
        rng.shuffle(all_items);
        std::uint64_t side1 = 0;
        for (int t = 0; t < side1_size; ++t) {
            side1 |= std::uint64_t{1} << all_items[static_cast<std::size_t>(t)];
        }
        out.add(Partition(u, ItemSet(side1), ItemSet(u.full_mask() & ~side1)));
    }
    return out;
}

std::vector<Valuation> capped_valuation_grid(Universe u, std::int64_t max_item,
                                             std::int64_t max_cap) {
    std::vector<Valuation> out;
    std::map<std::vector<std::int64_t>, bool> seen;
    std::vector<std::int64_t> per_item(static_cast<std::size_t>(u.size()), 0);
    const std::int64_t radix = max_item + 1;
    std::uint64_t combos = 1;
    for (int i = 0; i < u.size(); ++i) combos *= static_cast<std::uint64_t>(radix);

    for (std::uint64_t code = 0; code < combos; ++code) {
        std::uint64_t rest = code;
        for (int i = 0; i < u.size(); ++i) {
            per_item[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % radix);
            rest /= static_cast<std::uint64_t>(radix);
        }
        for (std::int64_t cap = 0; cap <= max_cap; ++cap) {
            Valuation v(u, CappedAdditiveValuation{AdditiveValuation{per_item}, cap});
            std::vector<std::int64_t> table = v.to_table();
            if (!seen.emplace(std::move(table), true).second) continue;
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Valuation> zero_one_valuation_grid(Universe u) {
    std::vector<Valuation> out;
    const std::uint64_t total = std::uint64_t{1} << u.size();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        out.emplace_back(u, ZeroOneAdditiveValuation{ItemSet(mask)});
    }
    return out;
}

}  // namespace pvc
