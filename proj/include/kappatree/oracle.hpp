#ifndef KAPPATREE_ORACLE_HPP
#define KAPPATREE_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappatree/cut_system.hpp"

/**
 * Brute-force reference implementations that follow the definitions literally: every
 * vertex subset is a candidate C, boundaries and components are recomputed from the
 * adjacency relation, and nothing is shared with the fast code paths beyond Graph itself.
 */
namespace kappatree::oracle {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::size_t max_vertices = 12;
    std::size_t max_subset_size = 12;
};

/// Y is k-inseparable: |Y| > k and every C with |NC| <= k has Y inside C ∪ NC or C* ∪ NC.
bool inseparable(const Graph& g, VertexSet y, std::size_t k, const Budget& budget = {});

/// Maximal k-inseparable sets, canonical order.
std::vector<VertexSet> maximal_inseparable_sets(const Graph& g, std::size_t k, const Budget& budget = {});

/// Least k such that some C with |NC| = k has one k-inseparable set in C ∪ NC and another in C* ∪ NC.
std::optional<std::size_t> kappa(const Graph& g, const Budget& budget = {});

/// Isolated-corner test: both adjacent links empty and no cut of `sys` inside the corner.
bool nested(const CutSystem& sys, std::size_t c, std::size_t d, const Budget& budget = {});

/// Every component C of V \ S over all kappa-subsets S, kept when NC = S, (C*)* = C, and C
/// separates two members of omega.
std::vector<VertexSet> cuts(const Graph& g, std::size_t kappa, const std::vector<VertexSet>& omega,
                            const Budget& budget = {});

struct Certificate {
    AxiomReport axioms;
    bool oracle_run = false;   ///< false when the graph exceeds the budget
    bool kappa_agrees = true;
    bool omega_agrees = true;
    bool cuts_agree = true;
    bool nesting_agrees = true;
    std::size_t nested_pairs_checked = 0;
    bool tree_valid = true;
    std::vector<std::string> problems;

    bool passed() const {
        return axioms.passed() && kappa_agrees && omega_agrees && cuts_agree && nesting_agrees && tree_valid;
    }
};

/// Runs the fast pipeline and compares it against the oracle where the budget allows.
Certificate certify(const Graph& g, const Budget& budget = {});

}  // namespace kappatree::oracle

#endif  // KAPPATREE_ORACLE_HPP
