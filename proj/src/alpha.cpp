#include "pvc/alpha.hpp"

#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pvc/enumerate.hpp"
#include "pvc/rng.hpp"

namespace pvc {

namespace {

struct Candidate {
    // Defaults compare as +infinity so any evaluated code displaces them.
    std::int64_t num = 1;
    std::int64_t den = 0;
    std::uint64_t s_code = UINT64_MAX;  // base-3 code of S; orders ties
    std::size_t t_index = 0;

    // Total order: smaller ratio first, then smaller S code.  Cross
    // multiplication is exact here (num, den <= m).
    bool better_than(const Candidate& o) const {
        const std::int64_t lhs = num * o.den;
        const std::int64_t rhs = o.num * den;
        if (lhs != rhs) return lhs < rhs;
        return s_code < o.s_code;
    }
};

// Best side-respecting overlap of any family entry against (s1, s2).
inline void best_overlap(const std::vector<Partition>& entries, std::uint64_t s1,
                         std::uint64_t s2, std::int64_t& best, std::size_t& best_idx) {
    best = -1;
    best_idx = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::int64_t overlap =
            std::popcount(s1 & entries[i].side1().bits()) +
            std::popcount(s2 & entries[i].side2().bits());
        if (overlap > best) {
            best = overlap;
            best_idx = i;
        }
    }
}

Candidate evaluate_code(const std::vector<Partition>& entries, std::uint64_t code, int m) {
    std::uint64_t s1, s2;
    decode_partition_code(code, m, s1, s2);
    Candidate c;
    c.den = std::popcount(s1) + std::popcount(s2);
    c.s_code = code;
    std::size_t idx;
    std::int64_t num;
    best_overlap(entries, s1, s2, num, idx);
    c.num = num;
    c.t_index = idx;
    return c;
}

AlphaReport finish(const PartitionFamily& r, const Candidate& best, AlphaMode mode,
                   std::uint64_t samples) {
    AlphaReport rep;
    rep.mode = mode;
    rep.samples = samples;
    rep.alpha = Rational(best.num, best.den);
    std::uint64_t s1, s2;
    decode_partition_code(best.s_code, r.universe().size(), s1, s2);
    rep.worst_s = Partition(r.universe(), ItemSet(s1), ItemSet(s2));
    rep.best_t_index = best.t_index;
    return rep;
}

AlphaReport alpha_exact_impl(const PartitionFamily& r, const Budget& budget,
                             bool parallel) {
    if (r.empty()) throw EmptyFamilyError("alpha of an empty family is undefined");
    const int m = r.universe().size();
    budget.require_pow3(m);
    const std::uint64_t total = pow3(m);

    Candidate best;
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            Candidate local;
#pragma omp for schedule(static) nowait
            for (std::int64_t code = 1; code < static_cast<std::int64_t>(total); ++code) {
                const Candidate c =
                    evaluate_code(r.entries(), static_cast<std::uint64_t>(code), m);
                if (c.better_than(local)) local = c;
            }
#pragma omp critical
            {
                if (local.better_than(best)) best = local;
            }
        }
        return finish(r, best, AlphaMode::Exact, 0);
#endif
    }

    for (std::uint64_t code = 1; code < total; ++code) {
        const Candidate c = evaluate_code(r.entries(), code, m);
        if (c.better_than(best)) best = c;
    }
    return finish(r, best, AlphaMode::Exact, 0);
}

}  // namespace

AlphaReport alpha_of(const PartitionFamily& r, AlphaMode mode, std::uint64_t samples,
                     std::uint64_t seed, const Budget& budget) {
    if (mode == AlphaMode::Exact) return alpha_exact_impl(r, budget, true);

    if (r.empty()) throw EmptyFamilyError("alpha of an empty family is undefined");
    if (samples == 0) throw ParseError("sampled alpha needs a positive sample count");
    const int m = r.universe().size();

    Rng rng(seed);
    Candidate best;
    for (std::uint64_t n = 0; n < samples; ++n) {
        // Uniform over partitions with nonempty support: draw item digits,
        // reject the all-neither outcome.
        std::uint64_t s1 = 0, s2 = 0, code = 0, scale = 1;
        do {
            s1 = s2 = code = 0;
            scale = 1;
            for (int i = 0; i < m; ++i) {
                const std::uint64_t digit = rng.below(3);
                if (digit == 1) s1 |= std::uint64_t{1} << i;
                if (digit == 2) s2 |= std::uint64_t{1} << i;
                code += digit * scale;
                scale *= 3;
            }
        } while ((s1 | s2) == 0);

        Candidate c;
        c.den = std::popcount(s1) + std::popcount(s2);
        c.s_code = code;
        std::int64_t num;
        std::size_t idx;
        best_overlap(r.entries(), s1, s2, num, idx);
        c.num = num;
        c.t_index = idx;
        if (c.better_than(best)) best = c;
    }
    return finish(r, best, AlphaMode::Sampled, samples);
}

namespace reference {

AlphaReport alpha_exact(const PartitionFamily& r, const Budget& budget) {
    return alpha_exact_impl(r, budget, false);
}

}  // namespace reference

}  // namespace pvc
