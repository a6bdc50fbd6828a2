#ifndef PVC_AUCTION_HPP
#define PVC_AUCTION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pvc/budget.hpp"
#include "pvc/partition.hpp"
#include "pvc/rational.hpp"
#include "pvc/rng.hpp"
#include "pvc/valuation.hpp"

namespace pvc {

/// A two-bidder auction: one universe of items, one valuation per bidder.
struct AuctionInstance {
    Universe universe;
    Valuation v1;
    Valuation v2;

    AuctionInstance(Universe u, Valuation bidder1, Valuation bidder2);
};

/// v1(side1) + v2(side2).
std::int64_t welfare(const AuctionInstance& inst, const Partition& p);

/// Welfare-maximal covering allocation by brute force over all 2^m covering
/// partitions; ties go to the first partition in the frozen enumeration
/// order.  Searching covering allocations only is lossless because
/// valuations are nondecreasing.
std::pair<Partition, std::int64_t> opt_allocation(const AuctionInstance& inst,
                                                  const Budget& budget = Budget{});

/// Allocation, its welfare, and the two pivot payments.
struct Outcome {
    Partition allocation;
    std::int64_t welfare = 0;
    std::int64_t payment1 = 0;
    std::int64_t payment2 = 0;
};

/// A mechanism that exactly optimizes welfare over a fixed nonempty range of
/// allocations, with ties broken toward the lowest range index.  With
/// allocate_all_items set, every range entry must cover the universe.
class MirMechanism {
  public:
    explicit MirMechanism(PartitionFamily range, bool allocate_all_items = false);

    const PartitionFamily& range() const { return range_; }
    bool allocate_all_items() const { return allocate_all_; }

  private:
    PartitionFamily range_;
    bool allocate_all_;
};

/// Pivot payments within the range: each bidder pays the damage its
/// presence does to the other's best range outcome.
std::pair<std::int64_t, std::int64_t> vcg_payments(const PartitionFamily& range,
                                                   const AuctionInstance& inst,
                                                   const Partition& chosen);

/// Runs the mechanism: lowest-index welfare maximizer over the range plus
/// pivot payments.  Individual rationality is checked on every run.
Outcome mir_allocate(const MirMechanism& mech, const AuctionInstance& inst);

/// The bundle mechanism: the two-entry range {(U,∅),(∅,U)}.
Outcome bundle_mechanism(const AuctionInstance& inst);

enum class ProfileSpace {
    DisjointZeroOne,      // 0/1-additive pairs with disjoint indicators (3^m)
    UnrestrictedZeroOne,  // all 0/1-additive pairs (4^m)
};

enum class RatioMode { Exact, Sampled };

/// Worst-case welfare ratio of the range mechanism over a space of
/// 0/1-additive profiles.
struct RatioReport {
    Rational worst{1};
    ItemSet witness_v1;  // indicator of bidder 1 at the minimum
    ItemSet witness_v2;
    RatioMode mode = RatioMode::Exact;
    std::uint64_t samples = 0;
    std::uint64_t profiles_evaluated = 0;
};

/// Minimum over profiles of mechanism welfare / optimal welfare; profiles
/// with zero optimum are skipped.  Exact mode enumerates the whole space;
/// sampled mode draws profiles uniformly under the seed.
RatioReport measure_ratio(const PartitionFamily& range, ProfileSpace space,
                          RatioMode mode = RatioMode::Exact, std::uint64_t samples = 0,
                          std::uint64_t seed = 0, const Budget& budget = Budget{});

namespace reference {
/// Serial twin of the exact ratio kernel.
RatioReport measure_ratio_exact(const PartitionFamily& range, ProfileSpace space,
                                const Budget& budget = Budget{});
}  // namespace reference

/// Transplants a valuation on d items onto a larger universe through an
/// injection (small item i -> embed[i]); items outside the image are worth
/// nothing.  The concrete class is preserved.
Valuation lift_valuation(const Valuation& small, const std::vector<int>& embed,
                         Universe big, const Budget& budget = Budget{});

/// Outcome of solving a small auction through a range that shatters a set.
struct ReductionReport {
    ItemSet target;
    std::int64_t small_opt = 0;
    std::int64_t projected_welfare = 0;
    Outcome big_outcome;
    Partition small_allocation;
};

/// Lifts a small instance onto the shattered set e (ascending items of e
/// carry small items 0..|e|-1), runs the range mechanism, projects the
/// chosen allocation back, and checks that its small welfare equals the
/// small optimum.  A mismatch throws; it can only mean a broken range
/// certificate or a bug.
ReductionReport run_reduction(const PartitionFamily& range, ItemSet e,
                              const AuctionInstance& small_inst,
                              const Budget& budget = Budget{});

/// q pairwise-disjoint item blocks of uniform size l.
struct BlockDesign {
    Universe universe;
    std::vector<ItemSet> blocks;
    int block_size = 0;
};

/// Uniformly random design: shuffle the items, cut q blocks of l off the
/// front.
BlockDesign sample_blocks(Universe u, int q, int l, Rng& rng);

/// True iff for every f : [q] -> {0,1} some member Z of z has exactly f(j)
/// elements in block j for all j.  With require_regular set, the family
/// must have uniform entry size.
bool is_block_shattered(const SetFamily& z, const BlockDesign& design,
                        bool require_regular = false, const Budget& budget = Budget{});

/// Spreads a capped-additive valuation on q items over the design's blocks:
/// every item of block j carries small item j's value and the block is
/// capped at that same value, so touching a block at all is worth exactly
/// the small item.  Leftover items form a zero block; the global cap is the
/// small cap.
Valuation lift_valuation_blocks(const Valuation& small, const BlockDesign& design);

struct BlockReductionReport {
    std::int64_t small_opt = 0;
    std::int64_t mapped_welfare = 0;
    Outcome big_outcome;
    Partition small_allocation;
};

/// Allocate-all-items reduction through a block design: lifts the small
/// capped-additive instance via the blocks, runs the covering-range
/// mechanism, maps the chosen allocation back (small item j goes to bidder
/// 1 iff side1 touches block j), and checks the mapped welfare against the
/// small optimum.  Exact equality requires singleton blocks.
BlockReductionReport run_block_reduction(const PartitionFamily& range,
                                         const BlockDesign& design,
                                         const AuctionInstance& small_inst,
                                         const Budget& budget = Budget{});

}  // namespace pvc

#endif
