#include "pvc/valuation.hpp"

#include <string>

#include "pvc/error.hpp"

namespace pvc {

namespace {

void require_per_item(const AdditiveValuation& v, Universe u, const char* what) {
    if (v.per_item.size() != static_cast<std::size_t>(u.size())) {
        throw ParseError(std::string(what) + " needs exactly one value per item");
    }
    for (std::int64_t x : v.per_item) {
        if (x < 0) throw ParseError(std::string(what) + " has a negative item value");
    }
}

}  // namespace

Valuation::Valuation(Universe u, AdditiveValuation v) : universe_(u), v_(std::move(v)) {
    require_per_item(std::get<AdditiveValuation>(v_), u, "additive valuation");
}

Valuation::Valuation(Universe u, CappedAdditiveValuation v)
    : universe_(u), v_(std::move(v)) {
    const auto& c = std::get<CappedAdditiveValuation>(v_);
    require_per_item(c.base, u, "capped additive valuation");
    if (c.cap < 0) throw ParseError("cap must be nonnegative");
}

Valuation::Valuation(Universe u, ZeroOneAdditiveValuation v)
    : universe_(u), v_(std::move(v)) {
    require_within(std::get<ZeroOneAdditiveValuation>(v_).indicator, u,
                   "zero/one indicator");
}

Valuation::Valuation(Universe u, DoubleCappedAdditiveValuation v)
    : universe_(u), v_(std::move(v)) {
    const auto& d = std::get<DoubleCappedAdditiveValuation>(v_);
    require_per_item(d.base, u, "double-capped additive valuation");
    if (d.block_caps.size() != d.blocks.size()) {
        throw ParseError("need one cap per block");
    }
    if (d.global_cap < 0) throw ParseError("global cap must be nonnegative");
    ItemSet covered;
    for (std::size_t t = 0; t < d.blocks.size(); ++t) {
        require_within(d.blocks[t], u, "block");
        if (d.blocks[t].intersects(covered)) {
            throw ParseError("blocks must be pairwise disjoint");
        }
        if (d.block_caps[t] < 0) throw ParseError("block caps must be nonnegative");
        covered = covered | d.blocks[t];
    }
    if (covered.bits() != u.full_mask()) {
        throw ParseError("blocks must cover every item");
    }
}

Valuation::Valuation(Universe u, TableValuation v) : universe_(u), v_(std::move(v)) {
    const auto& t = std::get<TableValuation>(v_);
    const std::size_t want = std::size_t{1} << u.size();
    if (t.values.size() != want) {
        throw ParseError("table valuation needs exactly 2^m entries");
    }
    for (std::int64_t x : t.values) {
        if (x < 0) throw ParseError("table valuation has a negative value");
    }
    // Nondecreasing along every single-item extension.
    for (std::uint64_t s = 0; s < want; ++s) {
        for (int j = 0; j < u.size(); ++j) {
            const std::uint64_t bigger = s | (std::uint64_t{1} << j);
            if (bigger != s && t.values[s] > t.values[bigger]) {
                throw ParseError("table valuation is not nondecreasing");
            }
        }
    }
}

std::vector<std::int64_t> Valuation::to_table(const Budget& budget) const {
    budget.require_pow2(universe_.size());
    const std::uint64_t total = std::uint64_t{1} << universe_.size();
    std::vector<std::int64_t> out(total);
    for (std::uint64_t s = 0; s < total; ++s) out[s] = value(ItemSet(s));
    return out;
}

bool Valuation::nondecreasing_exhaustive(const Budget& budget) const {
    budget.require_pow2(universe_.size());
    const std::uint64_t total = std::uint64_t{1} << universe_.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        const std::int64_t here = value(ItemSet(s));
        for (int j = 0; j < universe_.size(); ++j) {
            const std::uint64_t bigger = s | (std::uint64_t{1} << j);
            if (bigger != s && here > value(ItemSet(bigger))) return false;
        }
    }
    return true;
}

Valuation zero_valuation(Universe u) {
    return Valuation(u, AdditiveValuation{std::vector<std::int64_t>(
                            static_cast<std::size_t>(u.size()), 0)});
}

}  // namespace pvc
