#ifndef KAPPATREE_NESTING_HPP
#define KAPPATREE_NESTING_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kappatree/cut_system.hpp"

namespace kappatree {

/// Nestedness of two thin cuts: some link of their corner decomposition is empty.
/// Equivalent to having an isolated corner when both cuts belong to a thin cut system.
bool are_nested(const Graph& g, const Cut& c, const Cut& d);
bool are_nested(const CutSystem& sys, std::size_t c, std::size_t d);

struct NestingStats {
    std::vector<std::size_t> mu;                                 ///< indexed by cut id
    std::optional<std::size_t> mu_min;                           ///< absent for an empty system
    std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs;  ///< (i, j), i < j
};

/// mu(C) = number of cuts of the system not nested with C.
NestingStats mu_stats(const CutSystem& sys);

/**
 * @brief A pairwise nested subsystem together with where each cut came from.
 *
 * `parent_ids[i]` is the id in the parent system of cut i of `system`. For the
 * omega-optimal construction, `provenance[i]` lists the omega pairs (indices into the
 * parent's omega family) for which that cut is mu-minimal among the separating cuts.
 */
struct NestedSystem {
    CutSystem system;
    std::vector<std::size_t> parent_ids;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> provenance;
    /// Omega pairs no cut of the parent separates.
    std::vector<std::pair<std::size_t, std::size_t>> unseparated_pairs;
};

/// Cuts whose mu equals the global minimum.
NestedSystem optimally_nested_subsystem(const CutSystem& sys);
NestedSystem optimally_nested_subsystem(const CutSystem& sys, const NestingStats& stats);

/// All cuts that minimise mu among the cuts separating at least one pair of omega members.
NestedSystem omega_optimal_subsystem(const CutSystem& sys);
NestedSystem omega_optimal_subsystem(const CutSystem& sys, const NestingStats& stats);

/// Number of thin separators with vertices on both sides of C, times two. Diagnostic only:
/// it reproduces mu on some graphs but is not an identity.
std::size_t straddle_estimate(const CutSystem& sys, std::size_t id);

}  // namespace kappatree

#endif  // KAPPATREE_NESTING_HPP
