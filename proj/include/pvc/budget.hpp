#ifndef PVC_BUDGET_HPP
#define PVC_BUDGET_HPP

#include <cstdint>
#include <string>

#include "pvc/error.hpp"

namespace pvc {

/// Caps on exhaustive enumeration.  Defaults are desk-scale; the CLI can
/// raise them via flags or the PARTITION_VC_MAX_* environment variables.
struct Budget {
    int max_pow3_m = 14;      // 3^m full partition enumerations
    int max_pow2_m = 26;      // 2^m subset / covering-partition enumerations
    int max_subset_size = 22; // 2^|E| shattering checks

    /// Defaults overridden by PARTITION_VC_MAX_POW3_M, PARTITION_VC_MAX_POW2_M,
    /// PARTITION_VC_MAX_SUBSET_SIZE when set.
    static Budget from_env();

    void require_pow3(int m) const {
        if (m > max_pow3_m) {
            throw BudgetExceededError("3^" + std::to_string(m) +
                                      " enumeration exceeds budget (max m = " +
                                      std::to_string(max_pow3_m) + ")");
        }
        if (m > 39) {  // 3^40 no longer fits the 64-bit counters
            throw BudgetExceededError("3^" + std::to_string(m) +
                                      " exceeds 64-bit enumeration counters");
        }
    }
    void require_pow2(int m) const {
        if (m > max_pow2_m) {
            throw BudgetExceededError("2^" + std::to_string(m) +
                                      " enumeration exceeds budget (max m = " +
                                      std::to_string(max_pow2_m) + ")");
        }
    }
    void require_subset(int size) const {
        if (size > max_subset_size) {
            throw BudgetExceededError("shattering check on a set of size " +
                                      std::to_string(size) + " exceeds budget (max = " +
                                      std::to_string(max_subset_size) + ")");
        }
    }
};

inline std::uint64_t pow3(int m) {
    std::uint64_t r = 1;
    for (int i = 0; i < m; ++i) r *= 3;
    return r;
}

}  // namespace pvc

#endif
