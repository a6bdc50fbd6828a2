#ifndef PVC_CODES_HPP
#define PVC_CODES_HPP

#include <cstdint>

#include "pvc/partition.hpp"
#include "pvc/rational.hpp"
#include "pvc/rng.hpp"

namespace pvc {

/// Parameters for the randomized construction of a family of covering
/// partitions whose pairwise distances all reach ceil((1-delta)/2 * m).
struct CodeSpec {
    Universe universe;
    Rational delta;             // in (0,1)
    std::uint64_t target_size = 0;
    std::uint64_t max_attempts = 0;
    std::uint64_t seed = 0;

    int distance_threshold() const {
        const Rational t = (Rational(1) - delta) * universe.size() / 2;
        return static_cast<int>(ceil_of(t));
    }
};

/// A covering partition with each item placed on a uniformly random side.
Partition sample_covering_partition(Universe u, Rng& rng);

struct CodeBuildResult {
    PartitionFamily family;
    std::uint64_t attempts = 0;
    int threshold = 0;
    bool target_reached = false;
};

/// Greedy rejection sampling: draw random covering partitions and keep each
/// one that is at least threshold-far from everything kept so far, until the
/// target size or the attempt cap is hit.  The pairwise distance property of
/// the output is re-verified exactly before returning.  Falling short of the
/// target is reported, not thrown; growth studies use the achieved size.
CodeBuildResult build_code_family(const CodeSpec& spec);

}  // namespace pvc

#endif
