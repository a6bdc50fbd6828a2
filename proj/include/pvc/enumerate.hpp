#ifndef PVC_ENUMERATE_HPP
#define PVC_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "pvc/budget.hpp"
#include "pvc/partition.hpp"
#include "pvc/universe.hpp"

namespace pvc {

// Enumeration orders are frozen:
//  * all partitions: base-3 counting, item i is digit i (0 = neither,
//    1 = side1, 2 = side2), item 0 least significant;
//  * covering partitions of E: base-2 counting, the j-th smallest item of E
//    is bit j (0 = side1, 1 = side2).

/// Decodes the rank'th partition in the base-3 order.  No budget check.
inline void decode_partition_code(std::uint64_t code, int m, std::uint64_t& side1,
                                  std::uint64_t& side2) {
    side1 = 0;
    side2 = 0;
    for (int i = 0; i < m; ++i) {
        switch (code % 3) {
            case 1: side1 |= std::uint64_t{1} << i; break;
            case 2: side2 |= std::uint64_t{1} << i; break;
            default: break;
        }
        code /= 3;
    }
}

/// Stream of all 3^m partitions of the universe, in base-3 order.
class AllPartitionsRange {
  public:
    AllPartitionsRange(Universe u, const Budget& budget = Budget{}) : universe_(u) {
        budget.require_pow3(u.size());
        total_ = pow3(u.size());
    }

    class iterator {
      public:
        iterator(Universe u, std::uint64_t code) : universe_(u), code_(code) {}
        Partition operator*() const {
            std::uint64_t s1, s2;
            decode_partition_code(code_, universe_.size(), s1, s2);
            return Partition(universe_, ItemSet(s1), ItemSet(s2));
        }
        iterator& operator++() {
            ++code_;
            return *this;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.code_ == b.code_;
        }
        friend bool operator!=(const iterator& a, const iterator& b) {
            return a.code_ != b.code_;
        }

      private:
        Universe universe_;
        std::uint64_t code_;
    };

    iterator begin() const { return iterator(universe_, 0); }
    iterator end() const { return iterator(universe_, total_); }
    std::uint64_t size() const { return total_; }

  private:
    Universe universe_;
    std::uint64_t total_;
};

inline AllPartitionsRange enumerate_all_partitions(Universe u,
                                                   const Budget& budget = Budget{}) {
    return AllPartitionsRange(u, budget);
}

/// Builds the side2 mask of the code'th covering partition of e (side1 is
/// e minus side2).  items must be e.items().
inline std::uint64_t covering_side2_from_code(std::uint64_t code,
                                              const std::vector<int>& items) {
    std::uint64_t side2 = 0;
    for (std::size_t j = 0; j < items.size(); ++j) {
        if ((code >> j) & 1u) side2 |= std::uint64_t{1} << items[j];
    }
    return side2;
}

/// Stream of the 2^|e| partitions whose sides exactly exhaust e, in base-2
/// order.  Yields partitions over the given universe.
class CoveringPartitionsRange {
  public:
    CoveringPartitionsRange(Universe u, ItemSet e, const Budget& budget = Budget{})
        : universe_(u), target_(e), items_(e.items()) {
        require_within(e, u, "covering enumeration target");
        budget.require_pow2(e.count());
        total_ = std::uint64_t{1} << e.count();
    }

    class iterator {
      public:
        iterator(const CoveringPartitionsRange* range, std::uint64_t code)
            : range_(range), code_(code) {}
        Partition operator*() const {
            std::uint64_t s2 = covering_side2_from_code(code_, range_->items_);
            return Partition(range_->universe_, range_->target_ - ItemSet(s2), ItemSet(s2));
        }
        iterator& operator++() {
            ++code_;
            return *this;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.code_ == b.code_;
        }
        friend bool operator!=(const iterator& a, const iterator& b) {
            return a.code_ != b.code_;
        }

      private:
        const CoveringPartitionsRange* range_;
        std::uint64_t code_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, total_); }
    std::uint64_t size() const { return total_; }

  private:
    Universe universe_;
    ItemSet target_;
    std::vector<int> items_;
    std::uint64_t total_;
};

inline CoveringPartitionsRange enumerate_covering_partitions(
    Universe u, ItemSet e, const Budget& budget = Budget{}) {
    return CoveringPartitionsRange(u, e, budget);
}

/// All covering partitions of the full universe.
inline CoveringPartitionsRange enumerate_covering_partitions(
    Universe u, const Budget& budget = Budget{}) {
    return CoveringPartitionsRange(u, ItemSet(u.full_mask()), budget);
}

/// The family C(U) of all covering partitions of the universe.
PartitionFamily full_covering_family(Universe u, const Budget& budget = Budget{});

/// The two-entry bundle range {(U, ∅), (∅, U)}.
PartitionFamily bundle_range(Universe u);

/// The rank'th k-subset of [0, m) in ascending mask-value order.
std::uint64_t subset_unrank(int m, int k, std::uint64_t rank);

/// Binomial coefficient; exact in 64 bits for n <= 62.
std::uint64_t binomial(int n, int k);

}  // namespace pvc

#endif
