#include "pvc/sweeps.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "pvc/alpha.hpp"
#include "pvc/auction.hpp"
#include "pvc/codes.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/far.hpp"
#include "pvc/generators.hpp"
#include "pvc/shatter.hpp"

namespace pvc {

namespace {

std::string cell(ItemSet s) {
    std::string out;
    bool first = true;
    for (int i : s.items()) {
        if (!first) out += '|';
        out += std::to_string(i);
        first = false;
    }
    return out;
}

std::vector<int> sorted(std::vector<int> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return ms;
}

}  // namespace

std::string sweep_ratio(const std::vector<int>& ms, const Budget& budget) {
    std::ostringstream csv;
    csv << "m,range_id,worst_ratio_num,worst_ratio_den,witness\n";
    for (int m : sorted(ms)) {
        const Universe u(m);
        const RatioReport rep = measure_ratio(bundle_range(u), ProfileSpace::DisjointZeroOne,
                                              RatioMode::Exact, 0, 0, budget);
        csv << m << ",bundle," << rep.worst.numerator() << ',' << rep.worst.denominator()
            << ',' << cell(rep.witness_v1) << ';' << cell(rep.witness_v2) << '\n';
    }
    return csv.str();
}

std::string sweep_code_growth(const std::vector<int>& ms, const Rational& delta,
                              const std::vector<std::uint64_t>& seeds,
                              std::uint64_t max_attempts, const Budget& budget) {
    (void)budget;
    std::ostringstream csv;
    csv << "m,delta_num,delta_den,seed,target,achieved_size,min_distance,attempts\n";
    for (int m : sorted(ms)) {
        for (std::uint64_t seed : seeds) {
            const auto target =
                static_cast<std::uint64_t>(std::ceil(std::exp(m / 10.0)));
            const CodeSpec spec{Universe(m), delta, target, max_attempts, seed};
            const CodeBuildResult built = build_code_family(spec);
            const int verified = built.family.size() >= 2
                                     ? min_pairwise_distance(built.family).min_distance
                                     : m;
            csv << m << ',' << delta.numerator() << ',' << delta.denominator() << ','
                << seed << ',' << target << ',' << built.family.size() << ','
                << verified << ',' << built.attempts << '\n';
        }
    }
    return csv.str();
}

std::string sweep_alpha_vs_vc(const std::vector<int>& ms, std::size_t families_per_m,
                              std::uint64_t samples, std::uint64_t seed,
                              const Budget& budget) {
    std::ostringstream csv;
    csv << "m,family_id,alpha_num,alpha_den,vc,mode,samples\n";
    for (int m : sorted(ms)) {
        const Universe u(m);
        const bool exact = m <= 5;
        for (std::size_t id = 0; id < families_per_m; ++id) {
            Rng rng(derive_seed(seed, "alpha-vs-vc/" + std::to_string(m) + "/" +
                                          std::to_string(id)));
            const PartitionFamily r =
                random_family(u, 2 + static_cast<std::size_t>(rng.below(14)), rng);
            const AlphaReport alpha =
                exact ? alpha_of(r, AlphaMode::Exact, 0, 0, budget)
                      : alpha_of(r, AlphaMode::Sampled, samples,
                                 derive_seed(seed, "alpha-sample/" + std::to_string(m) +
                                                       "/" + std::to_string(id)),
                                 budget);
            const VcReport vc = vc_dimension(r, budget);
            csv << m << ',' << id << ',' << alpha.alpha.numerator() << ','
                << alpha.alpha.denominator() << ',' << vc.dimension << ','
                << (exact ? "exact" : "sampled") << ',' << (exact ? 0 : samples) << '\n';
        }
    }
    return csv.str();
}

namespace {

// Grows a random covering family until it is (1/2 + eps)-approximate,
// tracking the best overlap per partition code incrementally.
std::size_t grow_until_approximate(Universe u, const Rational& threshold, Rng& rng,
                                   const Budget& budget) {
    const int m = u.size();
    budget.require_pow3(m);
    const std::uint64_t total = pow3(m);

    // side masks per base-3 code, built from the code of the stripped digit
    std::vector<std::uint64_t> s1(total), s2(total);
    std::vector<std::uint8_t> size(total), best(total, 0);
    s1[0] = s2[0] = 0;
    size[0] = 0;
    for (std::uint64_t c = 1; c < total; ++c) {
        const std::uint64_t digit = c % 3;
        const std::uint64_t rest = c / 3;
        s1[c] = (s1[rest] << 1) | (digit == 1 ? 1u : 0u);
        s2[c] = (s2[rest] << 1) | (digit == 2 ? 1u : 0u);
        size[c] = static_cast<std::uint8_t>(std::popcount(s1[c]) + std::popcount(s2[c]));
    }

    const std::int64_t num = threshold.numerator();
    const std::int64_t den = threshold.denominator();
    auto satisfied = [&](std::uint64_t c) {
        return static_cast<std::int64_t>(best[c]) * den >=
               num * static_cast<std::int64_t>(size[c]);
    };

    std::uint64_t violations = 0;
    for (std::uint64_t c = 1; c < total; ++c) {
        if (!satisfied(c)) ++violations;
    }

    std::size_t added = 0;
    while (violations > 0) {
        if (added > 100000) {
            throw AssertionFailedError("covering growth did not converge");
        }
        const Partition t = sample_covering_partition(u, rng);
        ++added;
        const std::uint64_t t1 = t.side1().bits(), t2 = t.side2().bits();
        for (std::uint64_t c = 1; c < total; ++c) {
            const auto overlap = static_cast<std::uint8_t>(
                std::popcount(s1[c] & t1) + std::popcount(s2[c] & t2));
            if (overlap > best[c]) {
                const bool was = satisfied(c);
                best[c] = overlap;
                if (!was && satisfied(c)) --violations;
            }
        }
    }
    return added;
}

}  // namespace

std::string sweep_covering_size(const std::vector<int>& ms, const Rational& epsilon,
                                std::size_t trials, std::uint64_t seed,
                                const Budget& budget) {
    if (epsilon <= Rational(0) || epsilon >= Rational(1, 2)) {
        throw ParseError("epsilon must lie strictly between 0 and 1/2");
    }
    const Rational threshold = Rational(1, 2) + epsilon;
    std::ostringstream csv;
    csv << "m,epsilon_num,epsilon_den,trial,size\n";
    for (int m : sorted(ms)) {
        for (std::size_t trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(seed, "covering-size/" + std::to_string(m) + "/" +
                                          std::to_string(trial)));
            const std::size_t size =
                grow_until_approximate(Universe(m), threshold, rng, budget);
            csv << m << ',' << epsilon.numerator() << ',' << epsilon.denominator() << ','
                << trial << ',' << size << '\n';
        }
    }
    return csv.str();
}

}  // namespace pvc
