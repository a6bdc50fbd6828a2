#include "pvc/auction.hpp"

#include <algorithm>
#include <bit>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pvc/enumerate.hpp"
#include "pvc/shatter.hpp"

namespace pvc {

AuctionInstance::AuctionInstance(Universe u, Valuation bidder1, Valuation bidder2)
    : universe(u), v1(std::move(bidder1)), v2(std::move(bidder2)) {
    if (v1.universe() != u || v2.universe() != u) {
        throw UniverseMismatchError("valuations must match the instance universe");
    }
}

std::int64_t welfare(const AuctionInstance& inst, const Partition& p) {
    if (p.universe() != inst.universe) {
        throw UniverseMismatchError("allocation universe does not match the instance");
    }
    return inst.v1.value(p.side1()) + inst.v2.value(p.side2());
}

namespace {

// Best covering allocation under two bundle evaluators: maximizes
// eval1(side1) + eval2(side2) over all 2^m side2 patterns, first maximum in
// the frozen enumeration order wins.
template <typename Eval1, typename Eval2>
std::pair<std::uint64_t, std::int64_t> opt_covering(int m, Eval1&& eval1, Eval2&& eval2) {
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::uint64_t best_code = 0;
    std::int64_t best = -1;
    for (std::uint64_t side2 = 0; side2 <= full; ++side2) {
        const std::int64_t w = eval1(full & ~side2) + eval2(side2);
        if (w > best) {
            best = w;
            best_code = side2;
        }
    }
    return {best_code, best};
}

// Lowest-index welfare maximizer over the range under a per-entry evaluator.
template <typename Eval>
std::pair<std::size_t, std::int64_t> select_from_range(const PartitionFamily& range,
                                                       Eval&& eval) {
    std::size_t best_idx = 0;
    std::int64_t best = eval(range[0]);
    for (std::size_t i = 1; i < range.size(); ++i) {
        const std::int64_t w = eval(range[i]);
        if (w > best) {
            best = w;
            best_idx = i;
        }
    }
    return {best_idx, best};
}

}  // namespace

std::pair<Partition, std::int64_t> opt_allocation(const AuctionInstance& inst,
                                                  const Budget& budget) {
    const int m = inst.universe.size();
    budget.require_pow2(m);
    auto [code, w] = opt_covering(
        m, [&](std::uint64_t s) { return inst.v1.value(ItemSet(s)); },
        [&](std::uint64_t s) { return inst.v2.value(ItemSet(s)); });
    const ItemSet side2(code);
    return {Partition(inst.universe, ItemSet(inst.universe.full_mask()) - side2, side2),
            w};
}

MirMechanism::MirMechanism(PartitionFamily range, bool allocate_all_items)
    : range_(std::move(range)), allocate_all_(allocate_all_items) {
    if (range_.empty()) throw EmptyRangeError("mechanism range must be nonempty");
    if (allocate_all_ && !range_.all_covering()) {
        throw NotCoveringError("allocate-all-items range must contain covering "
                               "partitions only");
    }
}

std::pair<std::int64_t, std::int64_t> vcg_payments(const PartitionFamily& range,
                                                   const AuctionInstance& inst,
                                                   const Partition& chosen) {
    bool member = false;
    for (const Partition& t : range) {
        if (t == chosen) {
            member = true;
            break;
        }
    }
    if (!member) throw NotInRangeError("chosen allocation is not in the range");

    std::int64_t best_v2 = 0, best_v1 = 0;
    bool first = true;
    for (const Partition& t : range) {
        const std::int64_t w2 = inst.v2.value(t.side2());
        const std::int64_t w1 = inst.v1.value(t.side1());
        if (first) {
            best_v2 = w2;
            best_v1 = w1;
            first = false;
        } else {
            best_v2 = std::max(best_v2, w2);
            best_v1 = std::max(best_v1, w1);
        }
    }
    return {best_v2 - inst.v2.value(chosen.side2()),
            best_v1 - inst.v1.value(chosen.side1())};
}

Outcome mir_allocate(const MirMechanism& mech, const AuctionInstance& inst) {
    const PartitionFamily& range = mech.range();
    if (inst.universe != range.universe()) {
        throw UniverseMismatchError("instance universe does not match the range");
    }
    auto [idx, w] =
        select_from_range(range, [&](const Partition& t) { return welfare(inst, t); });

    Outcome out{range[idx], w, 0, 0};
    auto [p1, p2] = vcg_payments(range, inst, out.allocation);
    out.payment1 = p1;
    out.payment2 = p2;
    if (inst.v1.value(out.allocation.side1()) < p1 ||
        inst.v2.value(out.allocation.side2()) < p2) {
        throw AssertionFailedError("pivot payment exceeds the winner's value");
    }
    return out;
}

Outcome bundle_mechanism(const AuctionInstance& inst) {
    return mir_allocate(MirMechanism(bundle_range(inst.universe), true), inst);
}

namespace {

struct RatioCandidate {
    // Defaults compare as +infinity.
    std::int64_t num = 1;
    std::int64_t den = 0;
    std::uint64_t code = UINT64_MAX;

    bool better_than(const RatioCandidate& o) const {
        const std::int64_t lhs = num * o.den;
        const std::int64_t rhs = o.num * den;
        if (lhs != rhs) return lhs < rhs;
        return code < o.code;
    }
};

struct ZeroOneProfile {
    std::uint64_t a = 0;  // bidder 1 indicator
    std::uint64_t b = 0;  // bidder 2 indicator
};

ZeroOneProfile decode_profile(ProfileSpace space, std::uint64_t code, int m) {
    ZeroOneProfile p;
    if (space == ProfileSpace::DisjointZeroOne) {
        decode_partition_code(code, m, p.a, p.b);
    } else {
        for (int i = 0; i < m; ++i) {
            if ((code >> (2 * i)) & 1u) p.a |= std::uint64_t{1} << i;
            if ((code >> (2 * i + 1)) & 1u) p.b |= std::uint64_t{1} << i;
        }
    }
    return p;
}

// Mechanism and optimal welfare for one 0/1 profile, as a ratio candidate.
RatioCandidate evaluate_profile(const PartitionFamily& range, const ZeroOneProfile& p,
                                std::uint64_t code, int m) {
    const ZeroOneAdditiveValuation v1{ItemSet(p.a)};
    const ZeroOneAdditiveValuation v2{ItemSet(p.b)};
    auto [idx, mech] = select_from_range(range, [&](const Partition& t) {
        return v1.value(t.side1()) + v2.value(t.side2());
    });
    (void)idx;
    auto [opt_code, opt] = opt_covering(
        m, [&](std::uint64_t s) { return v1.value(ItemSet(s)); },
        [&](std::uint64_t s) { return v2.value(ItemSet(s)); });
    (void)opt_code;
    RatioCandidate c;
    if (opt == 0) return c;  // skipped: ratio undefined
    c.num = mech;
    c.den = opt;
    c.code = code;
    return c;
}

RatioReport measure_ratio_impl(const PartitionFamily& range, ProfileSpace space,
                               RatioMode mode, std::uint64_t samples, std::uint64_t seed,
                               const Budget& budget, bool parallel) {
    if (range.empty()) throw EmptyRangeError("ratio of an empty range is undefined");
    const int m = range.universe().size();

    RatioCandidate best;
    std::uint64_t evaluated = 0;

    if (mode == RatioMode::Exact) {
        std::uint64_t total;
        if (space == ProfileSpace::DisjointZeroOne) {
            budget.require_pow3(m);
            total = pow3(m);
        } else {
            budget.require_pow2(2 * m);
            total = std::uint64_t{1} << (2 * m);
        }
        budget.require_pow2(m);  // per-profile optimum
        evaluated = total - 1;   // only the all-empty profile is skipped

        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
            {
                RatioCandidate local;
#pragma omp for schedule(static) nowait
                for (std::int64_t code = 1; code < static_cast<std::int64_t>(total);
                     ++code) {
                    const ZeroOneProfile p =
                        decode_profile(space, static_cast<std::uint64_t>(code), m);
                    const RatioCandidate c = evaluate_profile(
                        range, p, static_cast<std::uint64_t>(code), m);
                    if (c.better_than(local)) local = c;
                }
#pragma omp critical
                {
                    if (local.better_than(best)) best = local;
                }
            }
#else
            parallel = false;
#endif
        }
        if (!parallel) {
            for (std::uint64_t code = 1; code < total; ++code) {
                const ZeroOneProfile p = decode_profile(space, code, m);
                const RatioCandidate c = evaluate_profile(range, p, code, m);
                if (c.better_than(best)) best = c;
            }
        }
    } else {
        if (samples == 0) throw ParseError("sampled ratio needs a positive sample count");
        budget.require_pow2(m);
        Rng rng(seed);
        for (std::uint64_t n = 0; n < samples; ++n) {
            std::uint64_t code = 0;
            if (space == ProfileSpace::DisjointZeroOne) {
                std::uint64_t scale = 1;
                for (int i = 0; i < m; ++i) {
                    code += rng.below(3) * scale;
                    scale *= 3;
                }
            } else {
                for (int i = 0; i < 2 * m; ++i) code |= rng.below(2) << i;
            }
            if (code == 0) continue;  // all-empty profile: optimum is zero
            ++evaluated;
            const ZeroOneProfile p = decode_profile(space, code, m);
            const RatioCandidate c = evaluate_profile(range, p, code, m);
            if (c.better_than(best)) best = c;
        }
        if (best.den == 0) {
            throw ParseError("every sampled profile was skipped; raise the sample count");
        }
    }

    RatioReport rep;
    rep.worst = Rational(best.num, best.den);
    const ZeroOneProfile witness = decode_profile(space, best.code, m);
    rep.witness_v1 = ItemSet(witness.a);
    rep.witness_v2 = ItemSet(witness.b);
    rep.mode = mode;
    rep.samples = mode == RatioMode::Sampled ? samples : 0;
    rep.profiles_evaluated = evaluated;
    return rep;
}

}  // namespace

RatioReport measure_ratio(const PartitionFamily& range, ProfileSpace space, RatioMode mode,
                          std::uint64_t samples, std::uint64_t seed, const Budget& budget) {
    return measure_ratio_impl(range, space, mode, samples, seed, budget, true);
}

namespace reference {
RatioReport measure_ratio_exact(const PartitionFamily& range, ProfileSpace space,
                                const Budget& budget) {
    return measure_ratio_impl(range, space, RatioMode::Exact, 0, 0, budget, false);
}
}  // namespace reference

namespace {

std::vector<int> validated_embedding(const std::vector<int>& embed, int small_m,
                                     Universe big) {
    if (embed.size() != static_cast<std::size_t>(small_m)) {
        throw InvalidEmbeddingError("embedding must place every small item");
    }
    std::uint64_t seen = 0;
    for (int target : embed) {
        if (target < 0 || target >= big.size()) {
            throw InvalidEmbeddingError("embedding target out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << target;
        if (seen & bit) throw InvalidEmbeddingError("embedding is not injective");
        seen |= bit;
    }
    return embed;
}

AdditiveValuation lift_additive(const AdditiveValuation& small,
                                const std::vector<int>& embed, Universe big) {
    AdditiveValuation out;
    out.per_item.assign(static_cast<std::size_t>(big.size()), 0);
    for (std::size_t i = 0; i < embed.size(); ++i) {
        out.per_item[static_cast<std::size_t>(embed[i])] = small.per_item[i];
    }
    return out;
}

}  // namespace

Valuation lift_valuation(const Valuation& small, const std::vector<int>& embed,
                         Universe big, const Budget& budget) {
    const int d = small.universe().size();
    const std::vector<int> map = validated_embedding(embed, d, big);

    struct Lifter {
        const std::vector<int>& map;
        Universe big;
        const Budget& budget;
        int d;

        Valuation operator()(const AdditiveValuation& v) const {
            return Valuation(big, lift_additive(v, map, big));
        }
        Valuation operator()(const CappedAdditiveValuation& v) const {
            return Valuation(big,
                             CappedAdditiveValuation{lift_additive(v.base, map, big), v.cap});
        }
        Valuation operator()(const ZeroOneAdditiveValuation& v) const {
            std::uint64_t indicator = 0;
            for (int i = 0; i < d; ++i) {
                if (v.indicator.contains(i)) {
                    indicator |= std::uint64_t{1} << map[static_cast<std::size_t>(i)];
                }
            }
            return Valuation(big, ZeroOneAdditiveValuation{ItemSet(indicator)});
        }
        Valuation operator()(const DoubleCappedAdditiveValuation& v) const {
            DoubleCappedAdditiveValuation out;
            out.base = lift_additive(v.base, map, big);
            out.global_cap = v.global_cap;
            std::uint64_t image = 0;
            for (int t : map) image |= std::uint64_t{1} << t;
            for (std::size_t t = 0; t < v.blocks.size(); ++t) {
                std::uint64_t block = 0;
                for (int i = 0; i < d; ++i) {
                    if (v.blocks[t].contains(i)) {
                        block |= std::uint64_t{1} << map[static_cast<std::size_t>(i)];
                    }
                }
                out.blocks.emplace_back(block);
                out.block_caps.push_back(v.block_caps[t]);
            }
            const std::uint64_t leftover = big.full_mask() & ~image;
            if (leftover != 0) {
                out.blocks.emplace_back(leftover);
                out.block_caps.push_back(0);
            }
            return Valuation(big, std::move(out));
        }
        Valuation operator()(const TableValuation& v) const {
            budget.require_pow2(big.size());
            TableValuation out;
            const std::uint64_t total = std::uint64_t{1} << big.size();
            out.values.resize(total);
            for (std::uint64_t s = 0; s < total; ++s) {
                std::uint64_t preimage = 0;
                for (int i = 0; i < d; ++i) {
                    if ((s >> map[static_cast<std::size_t>(i)]) & 1u) {
                        preimage |= std::uint64_t{1} << i;
                    }
                }
                out.values[s] = v.values[preimage];
            }
            return Valuation(big, std::move(out));
        }
    };
    return std::visit(Lifter{map, big, budget, d}, small.concrete());
}

ReductionReport run_reduction(const PartitionFamily& range, ItemSet e,
                              const AuctionInstance& small_inst, const Budget& budget) {
    require_within(e, range.universe(), "shattered set");
    if (small_inst.universe.size() != e.count()) {
        throw InvalidEmbeddingError("small instance must have exactly |E| items");
    }
    if (!is_shattered(range, e, budget).shattered) {
        throw NotShatteredError("range does not shatter the target set");
    }

    const std::vector<int> embed = e.items();
    const Universe big = range.universe();
    const AuctionInstance lifted(big, lift_valuation(small_inst.v1, embed, big, budget),
                                 lift_valuation(small_inst.v2, embed, big, budget));

    ReductionReport rep{e, 0, 0, mir_allocate(MirMechanism(range), lifted),
                        Partition(small_inst.universe, ItemSet(), ItemSet())};

    auto pull_back = [&](ItemSet side) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < embed.size(); ++i) {
            if (side.contains(embed[i])) mask |= std::uint64_t{1} << i;
        }
        return ItemSet(mask);
    };
    rep.small_allocation = Partition(small_inst.universe,
                                     pull_back(rep.big_outcome.allocation.side1()),
                                     pull_back(rep.big_outcome.allocation.side2()));
    rep.projected_welfare = small_inst.v1.value(rep.small_allocation.side1()) +
                            small_inst.v2.value(rep.small_allocation.side2());
    rep.small_opt = opt_allocation(small_inst, budget).second;
    if (rep.projected_welfare != rep.small_opt) {
        throw AssertionFailedError(
            "projected welfare " + std::to_string(rep.projected_welfare) +
            " misses the small optimum " + std::to_string(rep.small_opt));
    }
    return rep;
}

namespace {

void validate_design(const BlockDesign& design) {
    ItemSet covered;
    for (ItemSet block : design.blocks) {
        require_within(block, design.universe, "block");
        if (block.count() != design.block_size || design.block_size < 1) {
            throw InvalidDesignError("blocks must share the designated size");
        }
        if (block.intersects(covered)) {
            throw InvalidDesignError("blocks must be pairwise disjoint");
        }
        covered = covered | block;
    }
}

}  // namespace

BlockDesign sample_blocks(Universe u, int q, int l, Rng& rng) {
    if (q < 0 || l < 1) throw InvalidDesignError("need q >= 0 blocks of size l >= 1");
    if (static_cast<std::int64_t>(q) * l > u.size()) {
        throw InfeasibleDesignError("design needs " + std::to_string(q * l) +
                                    " items but the universe has " +
                                    std::to_string(u.size()));
    }
    std::vector<int> items(static_cast<std::size_t>(u.size()));
    for (int i = 0; i < u.size(); ++i) items[static_cast<std::size_t>(i)] = i;
    rng.shuffle(items);

    BlockDesign design{u, {}, l};
    design.blocks.reserve(static_cast<std::size_t>(q));
    std::size_t next = 0;
    for (int j = 0; j < q; ++j) {
        std::uint64_t mask = 0;
        for (int t = 0; t < l; ++t) mask |= std::uint64_t{1} << items[next++];
        design.blocks.emplace_back(mask);
    }
    validate_design(design);
    return design;
}

bool is_block_shattered(const SetFamily& z, const BlockDesign& design,
                        bool require_regular, const Budget& budget) {
    if (z.universe() != design.universe) {
        throw UniverseMismatchError("set family and design universes differ");
    }
    validate_design(design);
    if (require_regular && !z.regular()) {
        throw NotRegularError("the lifted pipeline needs a regular set family");
    }
    const int q = static_cast<int>(design.blocks.size());
    budget.require_pow2(q);
    const std::uint64_t need = std::uint64_t{1} << q;

    std::vector<bool> realized(need, false);
    std::uint64_t found = 0;
    for (ItemSet entry : z.entries()) {
        std::uint64_t code = 0;
        bool usable = true;
        for (int j = 0; j < q; ++j) {
            const int hits = (entry & design.blocks[static_cast<std::size_t>(j)]).count();
            if (hits > 1) {
                usable = false;
                break;
            }
            code |= static_cast<std::uint64_t>(hits) << j;
        }
        if (usable && !realized[code]) {
            realized[code] = true;
            if (++found == need) return true;
        }
    }
    return found == need;
}

Valuation lift_valuation_blocks(const Valuation& small, const BlockDesign& design) {
    validate_design(design);
    const auto* capped = std::get_if<CappedAdditiveValuation>(&small.concrete());
    if (capped == nullptr) {
        throw ParseError("block lift expects a capped additive valuation");
    }
    const int q = static_cast<int>(design.blocks.size());
    if (small.universe().size() != q) {
        throw InvalidDesignError("need exactly one block per small item");
    }

    const Universe big = design.universe;
    DoubleCappedAdditiveValuation out;
    out.base.per_item.assign(static_cast<std::size_t>(big.size()), 0);
    out.global_cap = capped->cap;
    ItemSet used;
    for (int j = 0; j < q; ++j) {
        const std::int64_t worth = capped->base.per_item[static_cast<std::size_t>(j)];
        for (int item : design.blocks[static_cast<std::size_t>(j)].items()) {
            out.base.per_item[static_cast<std::size_t>(item)] = worth;
        }
        out.blocks.push_back(design.blocks[static_cast<std::size_t>(j)]);
        out.block_caps.push_back(worth);
        used = used | design.blocks[static_cast<std::size_t>(j)];
    }
    const std::uint64_t leftover = big.full_mask() & ~used.bits();
    if (leftover != 0) {
        out.blocks.emplace_back(leftover);
        out.block_caps.push_back(0);
    }
    return Valuation(big, std::move(out));
}

BlockReductionReport run_block_reduction(const PartitionFamily& range,
                                         const BlockDesign& design,
                                         const AuctionInstance& small_inst,
                                         const Budget& budget) {
    const MirMechanism mech(range, /*allocate_all_items=*/true);
    const SetFamily r1 = side1_family(range);
    if (!is_block_shattered(r1, design, /*require_regular=*/true, budget)) {
        throw NotShatteredError("side1 family does not block-shatter the design");
    }
    const int q = static_cast<int>(design.blocks.size());
    if (small_inst.universe.size() != q) {
        throw InvalidDesignError("small instance must have one item per block");
    }

    const AuctionInstance lifted(design.universe,
                                 lift_valuation_blocks(small_inst.v1, design),
                                 lift_valuation_blocks(small_inst.v2, design));
    BlockReductionReport rep{0, 0, mir_allocate(mech, lifted),
                             Partition(small_inst.universe, ItemSet(), ItemSet())};

    std::uint64_t to_bidder1 = 0;
    for (int j = 0; j < q; ++j) {
        if (rep.big_outcome.allocation.side1().intersects(
                design.blocks[static_cast<std::size_t>(j)])) {
            to_bidder1 |= std::uint64_t{1} << j;
        }
    }
    const ItemSet small1(to_bidder1);
    const ItemSet small2(small_inst.universe.full_mask() & ~to_bidder1);
    rep.small_allocation = Partition(small_inst.universe, small1, small2);
    rep.mapped_welfare = small_inst.v1.value(small1) + small_inst.v2.value(small2);
    rep.small_opt = opt_allocation(small_inst, budget).second;
    if (rep.mapped_welfare != rep.small_opt) {
        throw AssertionFailedError("mapped welfare " + std::to_string(rep.mapped_welfare) +
                                   " misses the small optimum " +
                                   std::to_string(rep.small_opt));
    }
    return rep;
}

}  // namespace pvc
