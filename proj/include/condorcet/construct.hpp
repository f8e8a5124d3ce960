#pragma once

#include <string>
#include <utility>
#include <vector>

#include "condorcet/domain.hpp"
#include "condorcet/graph.hpp"

namespace condorcet {

enum class ClonePolicy { first, last };

ClonePolicy clone_policy_from_string(const std::string& name);

/// The alternative to clone in the next expansion step: the seed
/// alternative under `first`, the most recently introduced one under
/// `last` (the default, so each step clones the previous step's clone).
int choose_clone_target(const AlternativeSet& alts, ClonePolicy policy);

struct Construction {
    Domain domain;
    /// Input-graph vertex -> index into domain.orders(); a verified graph
    /// isomorphism onto Gamma_D.
    std::vector<int> vertex_to_order;
    /// (alternative, clone) index pairs, one per expansion step.
    std::vector<std::pair<int, int>> clone_pairs;
    std::vector<std::string> log;
};

/// Realizes a median graph as a closed Condorcet domain by replaying its
/// expansion sequence, cloning one alternative per step. The output
/// alternative count is 1 + number of steps <= |V|.
Construction build_domain(const Graph& g, ClonePolicy policy = ClonePolicy::last);

}  // namespace condorcet
