#ifndef PVC_SHATTER_HPP
#define PVC_SHATTER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pvc/budget.hpp"
#include "pvc/partition.hpp"

namespace pvc {

/// Evidence for (or against) a set being shattered by a family.  When
/// shattered, witnesses maps every covering partition of the target to the
/// lowest family index whose projection realizes it, in the frozen covering
/// enumeration order.
struct ShatterReport {
    ItemSet target;
    bool shattered = false;
    std::vector<std::pair<Partition, std::size_t>> witnesses;
};

/// A set E is shattered by r when every partition that covers E appears
/// among the projections of r onto E.
ShatterReport is_shattered(const PartitionFamily& r, ItemSet e,
                           const Budget& budget = Budget{});

/// Shattering test without witness materialization; the kernel behind
/// every exhaustive loop.  items must be e.items().
bool shattered_no_witness(const PartitionFamily& r, ItemSet e,
                          std::vector<std::uint64_t>& scratch);

struct VcReport {
    int dimension = 0;
    ItemSet witness_set;
};

/// Exact VC dimension of a partition family (largest shattered set), found
/// by ascending subset size with monotonicity pruning.  The witness is the
/// smallest-mask shattered set of maximum size.
VcReport vc_dimension(const PartitionFamily& r, const Budget& budget = Budget{});

/// Exact classical VC dimension of a set family (E shattered when every
/// subset of E arises as an intersection with a family member).
VcReport classical_vc(const SetFamily& z, const Budget& budget = Budget{});

bool classically_shattered(const SetFamily& z, ItemSet e);

/// Number of distinct sets realized by a set family.
std::size_t distinct_count(const SetFamily& z);

/// Checks the counting consequence of classical shattering: when the family
/// holds more than sum_{i<=d} C(m,i) distinct sets, its classical VC
/// dimension must exceed d.  Returns the truth of that implication, so a
/// correct implementation can never make it return false.
bool sauer_shelah_check(const SetFamily& z, int d, const Budget& budget = Budget{});

/// Number of subsets of the universe shattered by r (exhaustive over 2^m).
std::uint64_t count_shattered_sets(const PartitionFamily& r,
                                   const Budget& budget = Budget{});

struct CoveringVcBound {
    double log_ratio = 0.0;  // log |distinct side1 sets| / log m
    int vc = 0;
    int classical_side1_vc = 0;
};

/// For families of covering partitions: reports log|R1|/log m next to the
/// exact VC dimension.  The partition VC dimension always dominates the
/// classical VC dimension of the side1 family; callers assert that.
CoveringVcBound covering_vc_lower_bound(const PartitionFamily& r,
                                        const Budget& budget = Budget{});

namespace reference {
/// Serial twin of count_shattered_sets, kept as the comparison baseline for
/// the parallel kernel.
std::uint64_t count_shattered_sets(const PartitionFamily& r,
                                   const Budget& budget = Budget{});
/// Serial twin of vc_dimension.
VcReport vc_dimension(const PartitionFamily& r, const Budget& budget = Budget{});
}  // namespace reference

}  // namespace pvc

#endif
