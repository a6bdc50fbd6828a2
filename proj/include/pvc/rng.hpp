#ifndef PVC_RNG_HPP
#define PVC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace pvc {

// All randomized procedures draw from a seeded mt19937_64 through the
// unbiased helpers below; std::*_distribution is avoided because its output
// is not pinned by the standard.  Sequences are therefore stable across
// compilers and runs.

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw from [0, n), rejection-sampled to remove modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Fair coin.
    bool coin() { return (engine_() >> 63) != 0; }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-task seed = splitmix64(master ^ FNV-1a(task id)).  One master seed
/// fans out into independent, reproducible task streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view task_id) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : task_id) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(master ^ h);
}

}  // namespace pvc

#endif
