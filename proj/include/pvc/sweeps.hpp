#ifndef PVC_SWEEPS_HPP
#define PVC_SWEEPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pvc/budget.hpp"
#include "pvc/rational.hpp"

namespace pvc {

// Experiment grids emitting CSV text.  Rows appear in sorted grid order and
// are byte-identical for identical parameters.  Item sets inside a CSV cell
// are rendered as indices joined by '|' (sides separated by ';') so cells
// stay comma-free.

/// Worst 0/1 disjoint-profile welfare ratio of the bundle range per m.
/// Columns: m,range_id,worst_ratio_num,worst_ratio_den,witness
std::string sweep_ratio(const std::vector<int>& ms, const Budget& budget = Budget{});

/// Randomized far-family construction growth, one row per (m, seed).
/// The target size grows exponentially (ceil(e^(m/10))).
/// Columns: m,delta_num,delta_den,seed,target,achieved_size,min_distance,attempts
std::string sweep_code_growth(const std::vector<int>& ms, const Rational& delta,
                              const std::vector<std::uint64_t>& seeds,
                              std::uint64_t max_attempts,
                              const Budget& budget = Budget{});

/// Approximation level next to VC dimension over random families; exact
/// alpha up to m = 5, sampled above.
/// Columns: m,family_id,alpha_num,alpha_den,vc,mode,samples
std::string sweep_alpha_vs_vc(const std::vector<int>& ms, std::size_t families_per_m,
                              std::uint64_t samples, std::uint64_t seed,
                              const Budget& budget = Budget{});

/// Random incremental covering families grown until the approximation level
/// reaches 1/2 + epsilon; one row per (m, trial) with the reached size.
/// Columns: m,epsilon_num,epsilon_den,trial,size
std::string sweep_covering_size(const std::vector<int>& ms, const Rational& epsilon,
                                std::size_t trials, std::uint64_t seed,
                                const Budget& budget = Budget{});

}  // namespace pvc

#endif
