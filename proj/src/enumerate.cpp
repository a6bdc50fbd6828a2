#include "pvc/enumerate.hpp"

namespace pvc {

PartitionFamily full_covering_family(Universe u, const Budget& budget) {
    PartitionFamily out(u);
    for (const Partition& p : enumerate_covering_partitions(u, budget)) out.add(p);
    return out;
}

PartitionFamily bundle_range(Universe u) {
    PartitionFamily out(u);
    out.add(Partition(u, ItemSet(u.full_mask()), ItemSet()));
    out.add(Partition(u, ItemSet(), ItemSet(u.full_mask())));
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(r);
}

// Colexicographic unranking; ascending rank is ascending mask value.
std::uint64_t subset_unrank(int m, int k, std::uint64_t rank) {
    std::uint64_t mask = 0;
    for (int slot = k; slot > 0; --slot) {
        int c = slot - 1;
        while (c + 1 < m && binomial(c + 1, slot) <= rank) ++c;
        mask |= std::uint64_t{1} << c;
        rank -= binomial(c, slot);
        m = c;
    }
    return mask;
}

}  // namespace pvc
