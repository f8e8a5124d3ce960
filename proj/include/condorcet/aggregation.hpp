#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "condorcet/domain.hpp"

namespace condorcet {

/// An upward-closed family of winning coalitions over voters 0..n-1,
/// either an anonymous quota (every coalition of at least q voters) or an
/// antichain of minimal coalitions with membership by superset. Upward
/// closure is structural in both representations.
class CoalitionFamily {
public:
    static CoalitionFamily quota(int q);
    /// Generators are pruned to the minimal antichain.
    static CoalitionFamily from_minimal(std::vector<std::uint32_t> generators);

    bool is_quota() const { return quota_.has_value(); }
    int quota_value() const { return *quota_; }
    const std::vector<std::uint32_t>& minimal_sets() const { return minimal_; }

    bool contains(std::uint32_t coalition) const;
    bool subset_of(const CoalitionFamily& other, int n_voters) const;

private:
    CoalitionFamily() = default;
    std::optional<int> quota_;
    std::vector<std::uint32_t> minimal_;
};

/// Per-ordered-pair winning-coalition families W_xy. Construction
/// validates the structure axioms and rejects violations, naming the
/// violated equation: (6.2) for malformed families, (6.3) for properness
/// W in W_xy <=> N\W not in W_yx (for quotas, q_xy + q_yx = n+1).
class WinningStructure {
public:
    static WinningStructure anonymous_quota(AltSetPtr alts, int n_voters,
                                            const std::map<std::pair<int, int>, int>& quotas);
    static WinningStructure explicit_minimal(
        AltSetPtr alts, int n_voters,
        const std::map<std::pair<int, int>, std::vector<std::uint32_t>>& generators);
    /// Pairwise majority voting; n_voters must be odd.
    static WinningStructure majority(AltSetPtr alts, int n_voters);
    static WinningStructure dictatorship(AltSetPtr alts, int n_voters, int voter);

    int voters() const { return n_voters_; }
    const AltSetPtr& alt_set() const { return alts_; }
    const CoalitionFamily& family(int x, int y) const;
    bool anonymous() const;

private:
    WinningStructure(AltSetPtr alts, int n_voters, std::vector<CoalitionFamily> families);
    void validate() const;
    AltSetPtr alts_;
    int n_voters_ = 0;
    std::vector<CoalitionFamily> families_;  // index x * n_alts + y
};

/// Supporter-set inclusions imply winning-family inclusions (order
/// preservation of the structure on the domain).
bool is_order_preserving(const WinningStructure& w, const Domain& d);

/// The order R* with x R* y iff the supporters of (x, y) form a winning
/// coalition; nullopt when that pairwise relation is not an element of
/// the domain. No preconditions are checked.
std::optional<LinearOrder> pairwise_outcome(const WinningStructure& w, const Domain& d,
                                            std::span<const LinearOrder> voters);

/// The monotone Arrovian aggregator f_W. Preconditions (checked): the
/// domain is closed Condorcet, the structure is order preserving on it,
/// and the profile draws its orders from the domain.
LinearOrder aggregate(const WinningStructure& w, const Domain& d, const Profile& p);

/// Top alternative of the aggregate: the social choice function F_W.
int social_choice(const WinningStructure& w, const Domain& d, const Profile& p);

/// Voter-indexed profile as domain order indices, voter 0 first.
using IndexProfile = std::vector<int>;

struct AggregationAudit {
    bool unanimity = true;
    bool independence = true;
    bool monotonicity = true;
    bool full_range = true;
    std::optional<IndexProfile> unanimity_counterexample;
    std::optional<std::pair<IndexProfile, IndexProfile>> independence_counterexample;
    /// Profile, voter, deviation order index violating the interval form
    /// f(R_i, R_-i) in [R_i, f(R'_i, R_-i)].
    std::optional<std::tuple<IndexProfile, int, int>> monotonicity_counterexample;
    std::optional<int> full_range_missing;  // unreached domain order index

    bool all_hold() const { return unanimity && independence && monotonicity && full_range; }
};

/// Exhaustive verification of unanimity, independence, monotonicity and
/// full range of f_W over all |d|^n profiles. Refuses when |d|^n exceeds
/// the guard.
AggregationAudit audit_arrovian(const WinningStructure& w, const Domain& d, int n_voters,
                                std::size_t guard = default_guard(), unsigned jobs = 1);

struct StrategyProofnessResult {
    bool strategy_proof = true;
    /// Profile, manipulating voter, misreported order index.
    std::optional<std::tuple<IndexProfile, int, int>> counterexample;
};

/// Exhaustive strategy-proofness check of F_W over all profiles, voters
/// and deviations. Refuses when |d|^n * |d| * n exceeds the guard.
StrategyProofnessResult is_strategy_proof(const WinningStructure& w, const Domain& d, int n_voters,
                                          std::size_t guard = default_guard(), unsigned jobs = 1);

/// Every anonymous quota structure on the alternative set: one quota per
/// unordered pair, with the reverse quota forced by (6.3).
std::vector<WinningStructure> enumerate_anonymous_quota_structures(const AltSetPtr& alts,
                                                                   int n_voters);

}  // namespace condorcet
