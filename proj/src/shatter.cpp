#include "pvc/shatter.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pvc/enumerate.hpp"

namespace pvc {

namespace {

// Packs the side2 pattern of a covering projection onto e into a dense
// |e|-bit code, walking e's set bits in ascending order.
inline std::uint64_t compress_over(std::uint64_t pattern, std::uint64_t e) {
    std::uint64_t code = 0;
    int j = 0;
    for (std::uint64_t b = e; b != 0; b &= b - 1, ++j) {
        code |= ((pattern >> std::countr_zero(b)) & 1u) << j;
    }
    return code;
}

// Core of the shattering test: marks, for each covering partition of e,
// whether some entry projects onto it.  Returns true when all 2^|e| codes
// are realized.  scratch is a reusable bit table of at least 2^|e| bits.
bool shattered_kernel(const std::vector<Partition>& entries, std::uint64_t e, int k,
                      std::vector<std::uint64_t>& scratch) {
    const std::uint64_t need = std::uint64_t{1} << k;
    const std::size_t words = static_cast<std::size_t>((need + 63) / 64);
    scratch.assign(words, 0);
    std::uint64_t found = 0;
    for (const Partition& p : entries) {
        const std::uint64_t p1 = p.side1().bits() & e;
        const std::uint64_t p2 = p.side2().bits() & e;
        if ((p1 | p2) != e) continue;
        const std::uint64_t code = compress_over(p2, e);
        const std::uint64_t bit = std::uint64_t{1} << (code & 63);
        if (!(scratch[code >> 6] & bit)) {
            scratch[code >> 6] |= bit;
            if (++found == need) return true;
        }
    }
    return found == need;
}

}  // namespace

bool shattered_no_witness(const PartitionFamily& r, ItemSet e,
                          std::vector<std::uint64_t>& scratch) {
    return shattered_kernel(r.entries(), e.bits(), e.count(), scratch);
}

ShatterReport is_shattered(const PartitionFamily& r, ItemSet e, const Budget& budget) {
    require_within(e, r.universe(), "shattering target");
    budget.require_subset(e.count());

    ShatterReport rep;
    rep.target = e;

    const std::uint64_t need = std::uint64_t{1} << e.count();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> realized(need, kNone);
    std::uint64_t found = 0;
    const std::uint64_t bits = e.bits();
    for (std::size_t idx = 0; idx < r.size(); ++idx) {
        const std::uint64_t p1 = r[idx].side1().bits() & bits;
        const std::uint64_t p2 = r[idx].side2().bits() & bits;
        if ((p1 | p2) != bits) continue;
        const std::uint64_t code = compress_over(p2, bits);
        if (realized[code] == kNone) {
            realized[code] = idx;
            ++found;
        }
    }
    rep.shattered = (found == need);
    if (rep.shattered) {
        rep.witnesses.reserve(need);
        const std::vector<int> items = e.items();
        for (std::uint64_t code = 0; code < need; ++code) {
            const ItemSet s2(covering_side2_from_code(code, items));
            rep.witnesses.emplace_back(Partition(r.universe(), e - s2, s2),
                                       realized[code]);
        }
    }
    return rep;
}

namespace {

// Smallest shattered k-subset mask, or UINT64_MAX when none exists.  The
// combination space is walked by rank so iterations are independent.
std::uint64_t best_shattered_of_size(const PartitionFamily& r, int k, bool parallel) {
    const int m = r.universe().size();
    const std::uint64_t total = binomial(m, k);
    std::uint64_t best = UINT64_MAX;

    if (!parallel) {
        std::vector<std::uint64_t> scratch;
        // Ascending mask order; the first hit is the smallest.
        for (std::uint64_t rank = 0; rank < total; ++rank) {
            const std::uint64_t mask = subset_unrank(m, k, rank);
            if (shattered_kernel(r.entries(), mask, k, scratch)) return mask;
        }
        return best;
    }

#ifdef _OPENMP
#pragma omp parallel
    {
        std::uint64_t local_best = UINT64_MAX;
        std::vector<std::uint64_t> scratch;
#pragma omp for schedule(static) nowait
        for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(total); ++rank) {
            const std::uint64_t mask = subset_unrank(m, k, static_cast<std::uint64_t>(rank));
            if (mask < local_best && shattered_kernel(r.entries(), mask, k, scratch)) {
                local_best = mask;
            }
        }
#pragma omp critical
        {
            best = std::min(best, local_best);
        }
    }
#else
    std::vector<std::uint64_t> scratch;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        const std::uint64_t mask = subset_unrank(m, k, rank);
        if (shattered_kernel(r.entries(), mask, k, scratch)) {
            best = mask;
            break;
        }
    }
#endif
    return best;
}

VcReport vc_dimension_impl(const PartitionFamily& r, const Budget& budget, bool parallel) {
    if (r.empty()) {
        throw EmptyFamilyError("VC dimension of an empty family is undefined");
    }
    const int m = r.universe().size();
    budget.require_pow2(m);
    budget.require_subset(m);

    VcReport rep;  // the empty set is shattered by any nonempty family
    rep.dimension = 0;
    rep.witness_set = ItemSet();
    for (int k = 1; k <= m; ++k) {
        const std::uint64_t mask = best_shattered_of_size(r, k, parallel);
        if (mask == UINT64_MAX) break;  // shattering is monotone in the set
        rep.dimension = k;
        rep.witness_set = ItemSet(mask);
    }
    return rep;
}

std::uint64_t count_shattered_impl(const PartitionFamily& r, const Budget& budget,
                                   bool parallel) {
    const int m = r.universe().size();
    budget.require_pow2(m);
    budget.require_subset(m);
    const std::uint64_t total = std::uint64_t{1} << m;
    std::uint64_t count = 0;

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<std::uint64_t> scratch;
            std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
            for (std::int64_t e = 0; e < static_cast<std::int64_t>(total); ++e) {
                const std::uint64_t mask = static_cast<std::uint64_t>(e);
                if (shattered_kernel(r.entries(), mask, std::popcount(mask), scratch)) {
                    ++local;
                }
            }
#pragma omp atomic
            count += local;
        }
        return count;
#endif
    }

    std::vector<std::uint64_t> scratch;
    for (std::uint64_t e = 0; e < total; ++e) {
        if (shattered_kernel(r.entries(), e, std::popcount(e), scratch)) ++count;
    }
    return count;
}

}  // namespace

VcReport vc_dimension(const PartitionFamily& r, const Budget& budget) {
    return vc_dimension_impl(r, budget, true);
}

std::uint64_t count_shattered_sets(const PartitionFamily& r, const Budget& budget) {
    return count_shattered_impl(r, budget, true);
}

namespace reference {

VcReport vc_dimension(const PartitionFamily& r, const Budget& budget) {
    return vc_dimension_impl(r, budget, false);
}

std::uint64_t count_shattered_sets(const PartitionFamily& r, const Budget& budget) {
    return count_shattered_impl(r, budget, false);
}

}  // namespace reference

bool classically_shattered(const SetFamily& z, ItemSet e) {
    const std::uint64_t bits = e.bits();
    const int k = e.count();
    const std::uint64_t need = std::uint64_t{1} << k;
    const std::size_t words = static_cast<std::size_t>((need + 63) / 64);
    std::vector<std::uint64_t> seen(words, 0);
    std::uint64_t found = 0;
    for (ItemSet s : z.entries()) {
        const std::uint64_t code = compress_over(s.bits() & bits, bits);
        const std::uint64_t bit = std::uint64_t{1} << (code & 63);
        if (!(seen[code >> 6] & bit)) {
            seen[code >> 6] |= bit;
            if (++found == need) return true;
        }
    }
    return found == need;
}

VcReport classical_vc(const SetFamily& z, const Budget& budget) {
    if (z.empty()) {
        throw EmptyFamilyError("classical VC dimension of an empty family is undefined");
    }
    const int m = z.universe().size();
    budget.require_pow2(m);
    budget.require_subset(m);

    VcReport rep;
    rep.dimension = 0;
    rep.witness_set = ItemSet();
    for (int k = 1; k <= m; ++k) {
        const std::uint64_t total = binomial(m, k);
        std::uint64_t best = UINT64_MAX;
        for (std::uint64_t rank = 0; rank < total; ++rank) {
            const std::uint64_t mask = subset_unrank(m, k, rank);
            if (classically_shattered(z, ItemSet(mask))) {
                best = mask;
                break;
            }
        }
        if (best == UINT64_MAX) break;
        rep.dimension = k;
        rep.witness_set = ItemSet(best);
    }
    return rep;
}

std::size_t distinct_count(const SetFamily& z) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(z.size());
    for (ItemSet s : z.entries()) seen.insert(s.bits());
    return seen.size();
}

bool sauer_shelah_check(const SetFamily& z, int d, const Budget& budget) {
    if (z.empty()) return true;
    const int m = z.universe().size();
    std::uint64_t bound = 0;
    for (int i = 0; i <= d; ++i) bound += binomial(m, i);
    if (distinct_count(z) <= bound) return true;  // implication is vacuous
    return classical_vc(z, budget).dimension >= d + 1;
}

CoveringVcBound covering_vc_lower_bound(const PartitionFamily& r, const Budget& budget) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r[i].covers_universe()) {
            throw NotCoveringError("entry " + std::to_string(i) +
                                   " does not cover the universe");
        }
    }
    if (r.empty()) throw EmptyFamilyError("need a nonempty covering family");

    CoveringVcBound out;
    const SetFamily r1 = side1_family(r);
    out.log_ratio = std::log(static_cast<double>(r1.size())) /
                    std::log(static_cast<double>(r.universe().size()));
    out.vc = vc_dimension(r, budget).dimension;
    out.classical_side1_vc = classical_vc(r1, budget).dimension;
    return out;
}

}  // namespace pvc
