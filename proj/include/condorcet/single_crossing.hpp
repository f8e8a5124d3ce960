#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condorcet/domain.hpp"

namespace condorcet {

/// A single-crossing arrangement of the domain, when one exists: the
/// associated graph is a chain and the orders are listed endpoint to
/// endpoint, starting from the lexicographically smaller endpoint.
std::optional<std::vector<LinearOrder>> single_crossing_order(const Domain& d);

/// Structural single-crossing test on supporter sets: the nontrivial
/// bipartitions {V_xy, V_yx} admit orientations forming one inclusion
/// chain. Equivalent to the existence of a single-crossing arrangement.
bool condition_4_2(const Domain& d);

/// The associated graph is a tree.
bool is_generalized_single_crossing(const Domain& d);

/// Helly property for the family of nonempty supporter sets V_xy.
bool supporter_family_helly(const Domain& d);

/// For every two distinct unordered pairs {x,y}, {z,w}: at least one of
/// V_xy n V_zw, V_xy n V_wz, V_yx n V_zw, V_yx n V_wz is empty.
bool gsc_condition_4_3(const Domain& d);

/// Every odd profile over the domain has a voter whose order equals the
/// majority relation: the domain is single-crossing or a four-element
/// closed Condorcet domain whose graph is a 4-cycle.
bool representative_voter_property(const Domain& d);

/// A maximal single-crossing sequence R1..Rm between two completely
/// reversed endpoints; switching_pairs[j] = (x, y) with x above y in Rj
/// and the pair reversed in Rj+1.
struct MaximalChain {
    std::vector<LinearOrder> orders;
    std::vector<std::pair<int, int>> switching_pairs;

    const AltSetPtr& alt_set() const { return orders.front().alt_set(); }
    int length() const { return static_cast<int>(orders.size()); }
};

struct ChainResult {
    std::optional<MaximalChain> chain;
    std::string error;  // the first violated maximal-chain invariant
};

/// Validates an explicit order sequence as a maximal chain.
ChainResult chain_from_orders(std::vector<LinearOrder> seq);

/// Extracts the maximal chain of a domain: succeeds iff the domain is
/// single-crossing, connected, and maximal as single-crossing.
ChainResult extract_maximal_chain(const Domain& d);

/// Adjacent switching pairs share an alternative, for every edge pair.
bool pairwise_concatenation(const MaximalChain& c);

/// Reachability under swaps of adjacent disjoint switching pairs.
bool chains_equivalent(const MaximalChain& c1, const MaximalChain& c2);

/// Union of the orders of all equivalent maximal chains: the unique
/// maximal Condorcet domain containing the chain.
Domain equivalence_closure(const MaximalChain& c);

/// The pairwise concatenation condition decides maximality of the chain's
/// order set as a Condorcet domain.
bool maximal_sc_is_maximal_condorcet(const MaximalChain& c);

}  // namespace condorcet
