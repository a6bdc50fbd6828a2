#ifndef PVC_FAR_HPP
#define PVC_FAR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pvc/partition.hpp"
#include "pvc/rational.hpp"

namespace pvc {

/// Pairwise-distance structure of a family: the exact minimum over all
/// unordered pairs, with epsilon = min_distance / m.
struct FarFamilyReport {
    Rational epsilon{0};
    std::size_t k = 0;  // family size
    int min_distance = 0;
};

FarFamilyReport min_pairwise_distance(const PartitionFamily& r);

namespace reference {
/// Serial twin of min_pairwise_distance.
FarFamilyReport min_pairwise_distance(const PartitionFamily& r);
}  // namespace reference

using IndexPairing = std::vector<std::pair<std::size_t, std::size_t>>;

/// Pair entries in index order: (0,1), (2,3), ...; a trailing odd entry is
/// left unpaired.
IndexPairing canonical_pairing(std::size_t family_size);

/// The element found by scanning a paired family for the item that crosses
/// sides in the most pairs.
struct SplitWitness {
    int element = 0;        // lowest item index attaining the maximum
    std::uint64_t pair_count = 0;
    IndexPairing pairing;
};

/// For each item e, counts the pairs (T,T') with e ∈ T1∩T'2 or e ∈ T'1∩T2
/// and returns the maximizing item.  The pairing must consist of
/// floor(|r|/2) disjoint index pairs, each at distance >= 1.
SplitWitness find_splitting_element(const PartitionFamily& r, const IndexPairing& pairing);

/// Counting bound on the splitting element: when every pair of a size-k
/// family is at least epsilon*m-far, the best element crosses at least
/// ceil(floor(k/2) * epsilon) pairs.  Throws AssertionFailedError when the
/// witness falls short; returns the bound otherwise.
std::uint64_t verify_splitting_bound(const PartitionFamily& r, const IndexPairing& pairing,
                                     const Rational& epsilon);

/// Splits a family on an element: entries holding e on side1 (resp. side2)
/// survive into the first (resp. second) output with e removed, over the
/// universe of size m-1 with items above e shifted down.  Entries that do
/// not touch e appear in neither output.
std::pair<PartitionFamily, PartitionFamily> split_family(const PartitionFamily& r,
                                                         int element);

/// Greedy pass in index order keeping each entry whose distance to every
/// kept entry is at least d; the output is pairwise >= d-far by
/// construction and that is re-verified before returning.
PartitionFamily extract_far_subfamily(const PartitionFamily& r, int d);

}  // namespace pvc

#endif
