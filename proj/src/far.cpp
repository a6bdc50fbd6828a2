#include "pvc/far.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pvc {

namespace {

FarFamilyReport min_pairwise_impl(const PartitionFamily& r, bool parallel) {
    if (r.size() < 2) {
        throw TooFewEntriesError("pairwise distance needs at least two entries");
    }
    const std::size_t n = r.size();
    int best = r.universe().size() + 1;

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            int local = best;
#pragma omp for schedule(dynamic, 8) nowait
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
                for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
                    local = std::min(local, distance(r[static_cast<std::size_t>(i)], r[j]));
                }
            }
#pragma omp critical
            {
                best = std::min(best, local);
            }
        }
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                best = std::min(best, distance(r[i], r[j]));
            }
        }
    }

    FarFamilyReport rep;
    rep.k = n;
    rep.min_distance = best;
    rep.epsilon = Rational(best, r.universe().size());
    return rep;
}

}  // namespace

FarFamilyReport min_pairwise_distance(const PartitionFamily& r) {
    return min_pairwise_impl(r, true);
}

namespace reference {
FarFamilyReport min_pairwise_distance(const PartitionFamily& r) {
    return min_pairwise_impl(r, false);
}
}  // namespace reference

IndexPairing canonical_pairing(std::size_t family_size) {
    IndexPairing out;
    out.reserve(family_size / 2);
    for (std::size_t i = 0; i + 1 < family_size; i += 2) out.emplace_back(i, i + 1);
    return out;
}

namespace {

void validate_pairing(const PartitionFamily& r, const IndexPairing& pairing) {
    if (pairing.size() != r.size() / 2) {
        throw InvalidPairingError("pairing must hold exactly floor(|r|/2) pairs");
    }
    std::vector<bool> used(r.size(), false);
    for (auto [a, b] : pairing) {
        if (a >= r.size() || b >= r.size() || a == b) {
            throw InvalidPairingError("pairing index out of range or degenerate");
        }
        if (used[a] || used[b]) {
            throw InvalidPairingError("pairing reuses a family index");
        }
        used[a] = used[b] = true;
        if (distance(r[a], r[b]) == 0) {
            throw InvalidPairingError("paired partitions are at distance 0");
        }
    }
}

}  // namespace

SplitWitness find_splitting_element(const PartitionFamily& r, const IndexPairing& pairing) {
    validate_pairing(r, pairing);
    const int m = r.universe().size();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(m), 0);
    for (auto [a, b] : pairing) {
        const std::uint64_t crossing = (r[a].side1().bits() & r[b].side2().bits()) |
                                       (r[b].side1().bits() & r[a].side2().bits());
        for (std::uint64_t bits = crossing; bits != 0; bits &= bits - 1) {
            ++counts[static_cast<std::size_t>(std::countr_zero(bits))];
        }
    }
    SplitWitness w;
    w.pairing = pairing;
    w.element = 0;
    w.pair_count = counts.empty() ? 0 : counts[0];
    for (int e = 1; e < m; ++e) {
        if (counts[static_cast<std::size_t>(e)] > w.pair_count) {
            w.pair_count = counts[static_cast<std::size_t>(e)];
            w.element = e;
        }
    }
    return w;
}

std::uint64_t verify_splitting_bound(const PartitionFamily& r, const IndexPairing& pairing,
                                     const Rational& epsilon) {
    const int m = r.universe().size();
    const int far = static_cast<int>(ceil_of(epsilon * m));
    for (auto [a, b] : pairing) {
        if (distance(r[a], r[b]) < far) {
            throw InvalidPairingError("pair below the required distance");
        }
    }
    const SplitWitness w = find_splitting_element(r, pairing);
    // Crossing incidences sum to at least (pairs * epsilon * m) spread over
    // m items, so the best item covers at least ceil(pairs * epsilon) pairs.
    const std::uint64_t bound = static_cast<std::uint64_t>(
        ceil_of(epsilon * static_cast<std::int64_t>(pairing.size())));
    if (w.pair_count < bound) {
        throw AssertionFailedError("splitting element covers " +
                                   std::to_string(w.pair_count) + " pairs, below bound " +
                                   std::to_string(bound));
    }
    return bound;
}

std::pair<PartitionFamily, PartitionFamily> split_family(const PartitionFamily& r,
                                                         int element) {
    const int m = r.universe().size();
    if (element < 0 || element >= m) {
        throw RangeError("split element out of range: " + std::to_string(element));
    }
    if (m < 2) {
        throw RangeError("cannot split a one-item universe");
    }
    const Universe smaller(m - 1);
    const std::uint64_t low = (std::uint64_t{1} << element) - 1;
    auto drop = [&](std::uint64_t bits) {
        // Remove the element's bit and close the gap.
        return (bits & low) | ((bits >> (element + 1)) << element);
    };

    PartitionFamily with_side1(smaller);
    PartitionFamily with_side2(smaller);
    for (const Partition& p : r) {
        if (p.side1().contains(element)) {
            with_side1.add(Partition(smaller, ItemSet(drop(p.side1().bits())),
                                     ItemSet(drop(p.side2().bits()))));
        } else if (p.side2().contains(element)) {
            with_side2.add(Partition(smaller, ItemSet(drop(p.side1().bits())),
                                     ItemSet(drop(p.side2().bits()))));
        }
    }
    return {std::move(with_side1), std::move(with_side2)};
}

PartitionFamily extract_far_subfamily(const PartitionFamily& r, int d) {
    PartitionFamily kept(r.universe());
    for (const Partition& p : r) {
        bool ok = true;
        for (const Partition& q : kept) {
            if (distance(p, q) < d) {
                ok = false;
                break;
            }
        }
        if (ok) kept.add(p);
    }
    if (kept.size() >= 2 && min_pairwise_distance(kept).min_distance < d) {
        throw AssertionFailedError("far subfamily failed its own distance check");
    }
    return kept;
}

}  // namespace pvc
