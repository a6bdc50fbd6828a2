#include "pvc/budget.hpp"

#include <cstdlib>

namespace pvc {

namespace {

int env_int(const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const long parsed = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed < 1 || parsed > 62) {
        throw ParseError(std::string(name) + " must be an integer in [1, 62]");
    }
    return static_cast<int>(parsed);
}

}  // namespace

Budget Budget::from_env() {
    Budget b;
    b.max_pow3_m = env_int("PARTITION_VC_MAX_POW3_M", b.max_pow3_m);
    b.max_pow2_m = env_int("PARTITION_VC_MAX_POW2_M", b.max_pow2_m);
    b.max_subset_size = env_int("PARTITION_VC_MAX_SUBSET_SIZE", b.max_subset_size);
    return b;
}

}  // namespace pvc
