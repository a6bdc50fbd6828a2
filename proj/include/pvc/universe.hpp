#ifndef PVC_UNIVERSE_HPP
#define PVC_UNIVERSE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pvc/error.hpp"

namespace pvc {

/// A finite universe of items identified with the indices 0..m-1.
class Universe {
  public:
    static constexpr int kMaxItems = 62;

    explicit Universe(int m) : m_(m) {
        if (m < 1 || m > kMaxItems) {
            throw RangeError("universe size must be in [1, " + std::to_string(kMaxItems) +
                             "], got " + std::to_string(m));
        }
    }

    int size() const { return m_; }
    std::uint64_t full_mask() const { return (std::uint64_t{1} << m_) - 1; }

    friend bool operator==(Universe a, Universe b) { return a.m_ == b.m_; }
    friend bool operator!=(Universe a, Universe b) { return a.m_ != b.m_; }

  private:
    int m_;
};

/// A subset of item indices, packed into one 64-bit word.
class ItemSet {
  public:
    constexpr ItemSet() : bits_(0) {}
    constexpr explicit ItemSet(std::uint64_t bits) : bits_(bits) {}
    ItemSet(std::initializer_list<int> items) : bits_(0) {
        for (int i : items) bits_ |= std::uint64_t{1} << i;
    }

    static ItemSet from_items(const std::vector<int>& items) {
        ItemSet s;
        for (int i : items) {
            if (i < 0 || i >= Universe::kMaxItems) {
                throw RangeError("item index out of representable range: " + std::to_string(i));
            }
            s.bits_ |= std::uint64_t{1} << i;
        }
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int item) const { return (bits_ >> item) & 1u; }
    constexpr bool subset_of(ItemSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ItemSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr ItemSet operator&(ItemSet o) const { return ItemSet(bits_ & o.bits_); }
    constexpr ItemSet operator|(ItemSet o) const { return ItemSet(bits_ | o.bits_); }
    constexpr ItemSet operator^(ItemSet o) const { return ItemSet(bits_ ^ o.bits_); }
    constexpr ItemSet operator-(ItemSet o) const { return ItemSet(bits_ & ~o.bits_); }

    friend constexpr bool operator==(ItemSet a, ItemSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(ItemSet a, ItemSet b) { return a.bits_ != b.bits_; }
    friend constexpr auto operator<=>(ItemSet a, ItemSet b) { return a.bits_ <=> b.bits_; }

    /// Member indices in ascending order.
    std::vector<int> items() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(std::countr_zero(b));
        }
        return out;
    }

    /// True iff every member index is below m.
    bool within(Universe u) const { return (bits_ & ~u.full_mask()) == 0; }

    std::string to_string() const;

  private:
    std::uint64_t bits_;
};

/// Throws RangeError unless s fits inside u.
inline void require_within(ItemSet s, Universe u, const char* what) {
    if (!s.within(u)) {
        throw RangeError(std::string(what) + " contains an item index >= " +
                         std::to_string(u.size()));
    }
}

}  // namespace pvc

#endif
