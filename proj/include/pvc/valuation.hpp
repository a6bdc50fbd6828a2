#ifndef PVC_VALUATION_HPP
#define PVC_VALUATION_HPP

#include <bit>
#include <cstdint>
#include <variant>
#include <vector>

#include "pvc/budget.hpp"
#include "pvc/universe.hpp"

namespace pvc {

// Valuations are integer-valued, nondecreasing set functions.  The
// parametric classes are nondecreasing by construction (nonnegative item
// values and caps); explicit tables are validated exhaustively.

struct AdditiveValuation {
    std::vector<std::int64_t> per_item;

    std::int64_t value(ItemSet s) const {
        std::int64_t total = 0;
        for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
            total += per_item[static_cast<std::size_t>(std::countr_zero(b))];
        }
        return total;
    }
};

struct CappedAdditiveValuation {
    AdditiveValuation base;
    std::int64_t cap = 0;

    std::int64_t value(ItemSet s) const {
        const std::int64_t raw = base.value(s);
        return raw < cap ? raw : cap;
    }
};

struct ZeroOneAdditiveValuation {
    ItemSet indicator;  // items valued 1

    std::int64_t value(ItemSet s) const { return (s & indicator).count(); }
};

struct DoubleCappedAdditiveValuation {
    std::vector<ItemSet> blocks;  // pairwise disjoint, exhaustive
    AdditiveValuation base;
    std::vector<std::int64_t> block_caps;
    std::int64_t global_cap = 0;

    std::int64_t value(ItemSet s) const {
        std::int64_t total = 0;
        for (std::size_t t = 0; t < blocks.size(); ++t) {
            const std::int64_t raw = base.value(s & blocks[t]);
            total += raw < block_caps[t] ? raw : block_caps[t];
        }
        return total < global_cap ? total : global_cap;
    }
};

struct TableValuation {
    std::vector<std::int64_t> values;  // indexed by bundle mask, 2^m entries

    std::int64_t value(ItemSet s) const { return values[s.bits()]; }
};

/// Value-semantic wrapper over the concrete classes, carrying its universe.
class Valuation {
  public:
    using Concrete = std::variant<AdditiveValuation, CappedAdditiveValuation,
                                  ZeroOneAdditiveValuation, DoubleCappedAdditiveValuation,
                                  TableValuation>;

    Valuation(Universe u, AdditiveValuation v);
    Valuation(Universe u, CappedAdditiveValuation v);
    Valuation(Universe u, ZeroOneAdditiveValuation v);
    Valuation(Universe u, DoubleCappedAdditiveValuation v);
    Valuation(Universe u, TableValuation v);

    Universe universe() const { return universe_; }
    const Concrete& concrete() const { return v_; }

    std::int64_t value(ItemSet s) const {
        return std::visit([s](const auto& v) { return v.value(s); }, v_);
    }

    /// Materializes all 2^m bundle values (hot-loop form).
    std::vector<std::int64_t> to_table(const Budget& budget = Budget{}) const;

    /// Exhaustively verifies S ⊆ T ⇒ value(S) <= value(T).
    bool nondecreasing_exhaustive(const Budget& budget = Budget{}) const;

  private:
    Universe universe_;
    Concrete v_;
};

/// Zero-everywhere additive valuation.
Valuation zero_valuation(Universe u);

}  // namespace pvc

#endif
