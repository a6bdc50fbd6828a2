#ifndef PVC_PARTITION_HPP
#define PVC_PARTITION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pvc/error.hpp"
#include "pvc/universe.hpp"

namespace pvc {

/// An ordered pair of disjoint item sets over a fixed universe.  The two
/// sides need not exhaust the universe.
class Partition {
  public:
    Partition(Universe u, ItemSet side1, ItemSet side2)
        : universe_(u), side1_(side1), side2_(side2) {
        require_within(side1, u, "side1");
        require_within(side2, u, "side2");
        if (side1.intersects(side2)) {
            throw OverlapError("partition sides overlap on " +
                               (side1 & side2).to_string());
        }
    }

    Universe universe() const { return universe_; }
    ItemSet side1() const { return side1_; }
    ItemSet side2() const { return side2_; }
    ItemSet support() const { return side1_ | side2_; }

    /// True iff the two sides exhaust the universe.
    bool covers_universe() const {
        return support().bits() == universe_.full_mask();
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.universe_ == b.universe_ && a.side1_ == b.side1_ && a.side2_ == b.side2_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string to_string() const;

  private:
    Universe universe_;
    ItemSet side1_;
    ItemSet side2_;
};

/// Validating constructor; the canonical way to build a partition from raw sets.
inline Partition make_partition(Universe u, ItemSet side1, ItemSet side2) {
    return Partition(u, side1, side2);
}

inline bool is_covering(const Partition& p) { return p.covers_universe(); }

/// The partition (side1 ∩ e, side2 ∩ e).  Item indices keep their original
/// labels; the result is still a partition over the same universe.
inline Partition project(const Partition& p, ItemSet e) {
    require_within(e, p.universe(), "projection target");
    return Partition(p.universe(), p.side1() & e, p.side2() & e);
}

/// Crossed-intersection distance: |p1 ∩ q2| + |q1 ∩ p2|.
inline int distance(const Partition& p, const Partition& q) {
    if (p.universe() != q.universe()) {
        throw UniverseMismatchError("distance needs partitions over the same universe");
    }
    return (p.side1() & q.side2()).count() + (q.side1() & p.side2()).count();
}

/// An indexed, ordered collection of partitions over one universe.
/// Duplicates are permitted; entry indices are the downstream tie-break key.
class PartitionFamily {
  public:
    explicit PartitionFamily(Universe u) : universe_(u) {}
    PartitionFamily(Universe u, std::vector<Partition> entries) : universe_(u) {
        entries_.reserve(entries.size());
        for (auto& p : entries) add(std::move(p));
    }

    Universe universe() const { return universe_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Partition& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Partition>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    void add(Partition p) {
        if (p.universe() != universe_) {
            throw UniverseMismatchError("family entry built over a different universe");
        }
        entries_.push_back(std::move(p));
    }

    bool all_covering() const {
        for (const auto& p : entries_) {
            if (!p.covers_universe()) return false;
        }
        return true;
    }

  private:
    Universe universe_;
    std::vector<Partition> entries_;
};

/// Distinct projections of the family onto e, in first-occurrence order.
PartitionFamily project_family(const PartitionFamily& r, ItemSet e);

/// An ordered collection of plain item sets over one universe (classical
/// set-system counterpart of PartitionFamily).
class SetFamily {
  public:
    explicit SetFamily(Universe u) : universe_(u) {}
    SetFamily(Universe u, std::vector<ItemSet> entries)
        : universe_(u), entries_(std::move(entries)) {
        for (ItemSet s : entries_) require_within(s, u, "set family entry");
    }

    Universe universe() const { return universe_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    ItemSet operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<ItemSet>& entries() const { return entries_; }

    void add(ItemSet s) {
        require_within(s, universe_, "set family entry");
        entries_.push_back(s);
    }

    /// True iff all entries have the same cardinality.
    bool regular() const {
        if (entries_.empty()) return true;
        int k = entries_.front().count();
        for (ItemSet s : entries_) {
            if (s.count() != k) return false;
        }
        return true;
    }

  private:
    Universe universe_;
    std::vector<ItemSet> entries_;
};

/// The family of first-side sets {S1 : (S1,S2) ∈ r}, duplicates removed,
/// first-occurrence order.
SetFamily side1_family(const PartitionFamily& r);

}  // namespace pvc

#endif
