#include "pvc/partition.hpp"

#include <unordered_set>

#include "pvc/enumerate.hpp"

namespace pvc {

std::string ItemSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : items()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

std::string Partition::to_string() const {
    return "(" + side1_.to_string() + "," + side2_.to_string() + ")";
}

namespace {

struct MaskPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
};

}  // namespace

PartitionFamily project_family(const PartitionFamily& r, ItemSet e) {
    require_within(e, r.universe(), "projection target");
    PartitionFamily out(r.universe());
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, MaskPairHash> seen;
    seen.reserve(r.size());
    for (const Partition& p : r) {
        const ItemSet s1 = p.side1() & e;
        const ItemSet s2 = p.side2() & e;
        if (seen.emplace(s1.bits(), s2.bits()).second) {
            out.add(Partition(r.universe(), s1, s2));
        }
    }
    return out;
}

SetFamily side1_family(const PartitionFamily& r) {
    SetFamily out(r.universe());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(r.size());
    for (const Partition& p : r) {
        if (seen.insert(p.side1().bits()).second) out.add(p.side1());
    }
    return out;
}

}  // namespace pvc
