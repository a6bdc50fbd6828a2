#ifndef PVC_ALPHA_HPP
#define PVC_ALPHA_HPP

#include <cstdint>
#include <optional>

#include "pvc/budget.hpp"
#include "pvc/partition.hpp"
#include "pvc/rational.hpp"

namespace pvc {

enum class AlphaMode { Exact, Sampled };

/// The approximation level of a family: the worst, over partitions S of the
/// universe, of the best side-respecting overlap fraction any family member
/// achieves against S.  S = (∅,∅) is excluded (zero denominator).
struct AlphaReport {
    Rational alpha{0};
    std::optional<Partition> worst_s;  // first attaining S in base-3 order
    std::size_t best_t_index = 0;      // lowest family index attaining the max for worst_s
    AlphaMode mode = AlphaMode::Exact;
    std::uint64_t samples = 0;         // sampled mode only
};

/// Exact mode minimizes over all 3^m - 1 nonempty-support partitions S;
/// sampled mode minimizes over `samples` uniform draws from the same space
/// and is an upper bound on the exact value.
AlphaReport alpha_of(const PartitionFamily& r, AlphaMode mode = AlphaMode::Exact,
                     std::uint64_t samples = 0, std::uint64_t seed = 0,
                     const Budget& budget = Budget{});

namespace reference {
/// Serial twin of the exact kernel.
AlphaReport alpha_exact(const PartitionFamily& r, const Budget& budget = Budget{});
}  // namespace reference

}  // namespace pvc

#endif
