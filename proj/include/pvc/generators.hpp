#ifndef PVC_GENERATORS_HPP
#define PVC_GENERATORS_HPP

#include <cstdint>

#include "pvc/auction.hpp"
#include "pvc/partition.hpp"
#include "pvc/rng.hpp"
#include "pvc/valuation.hpp"

namespace pvc {

// Randomized inputs for verification suites and experiments.  Everything is
// a pure function of the supplied generator state.

/// Family of `size` partitions, each item independently neither/side1/side2.
PartitionFamily random_family(Universe u, std::size_t size, Rng& rng);

/// Family of `size` covering partitions.
PartitionFamily random_covering_family(Universe u, std::size_t size, Rng& rng);

/// Set family of `size` uniformly random subsets.
SetFamily random_set_family(Universe u, std::size_t size, Rng& rng);

/// All size-k subsets of the universe.
SetFamily all_k_subsets(Universe u, int k);

/// Uniformly random capped-additive valuation with per-item values in
/// [0, max_item] and cap in [0, max_cap].
Valuation random_capped_valuation(Universe u, std::int64_t max_item,
                                  std::int64_t max_cap, Rng& rng);

/// Greedy rejection sampling of covering partitions at an explicit pairwise
/// distance floor; stops at the target size or the attempt cap.
PartitionFamily greedy_far_covering_family(Universe u, int min_distance,
                                           std::size_t target, std::uint64_t attempts,
                                           Rng& rng);

/// A family that shatters e by construction: every covering partition of e
/// appears, extended by random disjoint sets outside e, followed by `noise`
/// random partitions.
PartitionFamily planted_shattered_range(Universe u, ItemSet e, std::size_t noise,
                                        Rng& rng);

/// A covering family whose side1 sets are regular (uniform size q*l) and
/// block-shatter the design by construction, followed by `noise` random
/// covering partitions with side1 of the same size.
PartitionFamily planted_block_shattered_range(const BlockDesign& design,
                                              std::size_t noise, Rng& rng);

/// All capped-additive valuations with per-item values in [0, max_item] and
/// caps in [0, max_cap], deduplicated by value table.
std::vector<Valuation> capped_valuation_grid(Universe u, std::int64_t max_item,
                                             std::int64_t max_cap);

/// All 2^m zero/one-additive valuations.
std::vector<Valuation> zero_one_valuation_grid(Universe u);

}  // namespace pvc

#endif
