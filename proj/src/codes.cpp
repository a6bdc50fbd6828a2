#include "pvc/codes.hpp"

#include "pvc/far.hpp"

namespace pvc {

Partition sample_covering_partition(Universe u, Rng& rng) {
    std::uint64_t side1 = 0;
    for (int i = 0; i < u.size(); ++i) {
        if (rng.coin()) side1 |= std::uint64_t{1} << i;
    }
    return Partition(u, ItemSet(side1), ItemSet(u.full_mask() & ~side1));
}

CodeBuildResult build_code_family(const CodeSpec& spec) {
    // delta = 1 is allowed and turns the distance requirement off.
    if (spec.delta <= Rational(0) || spec.delta > Rational(1)) {
        throw ParseError("delta must lie in (0, 1]");
    }
    const int threshold = spec.distance_threshold();
    Rng rng(spec.seed);

    CodeBuildResult out{PartitionFamily(spec.universe), 0, threshold, false};
    while (out.attempts < spec.max_attempts &&
           out.family.size() < spec.target_size) {
        ++out.attempts;
        const Partition candidate = sample_covering_partition(spec.universe, rng);
        bool far_enough = true;
        for (const Partition& kept : out.family) {
            if (distance(kept, candidate) < threshold) {
                far_enough = false;
                break;
            }
        }
        if (far_enough) out.family.add(candidate);
    }
    out.target_reached = out.family.size() >= spec.target_size;

    if (out.family.size() >= 2 &&
        min_pairwise_distance(out.family).min_distance < threshold) {
        throw AssertionFailedError("code family failed its exact distance check");
    }
    return out;
}

}  // namespace pvc
