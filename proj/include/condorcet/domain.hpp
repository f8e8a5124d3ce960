#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "condorcet/order.hpp"

namespace condorcet {

/// A deduplicated set of linear orders over one alternative set, kept in
/// canonical (lexicographic) order so equal domains serialize identically.
class Domain {
public:
    static Domain from_orders(std::vector<LinearOrder> orders);

    const std::vector<LinearOrder>& orders() const { return orders_; }
    const AltSetPtr& alt_set() const { return alts_; }
    int size() const { return static_cast<int>(orders_.size()); }
    const LinearOrder& at(int i) const { return orders_[static_cast<std::size_t>(i)]; }
    bool contains(const LinearOrder& r) const { return index_of(r).has_value(); }
    std::optional<int> index_of(const LinearOrder& r) const;

    bool operator==(const Domain& other) const { return orders_ == other.orders_; }

private:
    Domain(AltSetPtr alts, std::vector<LinearOrder> orders);
    AltSetPtr alts_;
    std::vector<LinearOrder> orders_;
};

/// A multiset of orders with voter multiplicities.
class Profile {
public:
    using Entry = std::pair<LinearOrder, int>;
    static Profile from_entries(std::vector<Entry> entries);
    static Profile from_orders(std::vector<LinearOrder> orders);

    const std::vector<Entry>& entries() const { return entries_; }
    const AltSetPtr& alt_set() const { return alts_; }
    int total_voters() const { return total_; }
    bool odd() const { return total_ % 2 == 1; }
    /// One order per voter, entries flattened in order.
    std::vector<LinearOrder> expand() const;

private:
    Profile(AltSetPtr alts, std::vector<Entry> entries, int total);
    AltSetPtr alts_;
    std::vector<Entry> entries_;
    int total_;
};

/// Asymmetric strict-majority relation. Possibly incomplete for even
/// profiles (ties carry neither direction).
class MajorityRelation {
public:
    MajorityRelation(AltSetPtr alts, std::vector<std::vector<bool>> wins);

    bool wins(int x, int y) const {
        return wins_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
    bool complete() const;
    const AltSetPtr& alt_set() const { return alts_; }
    int size() const { return alts_->size(); }

private:
    AltSetPtr alts_;
    std::vector<std::vector<bool>> wins_;
};

MajorityRelation majority_relation(const Profile& p);
bool is_acyclic(const MajorityRelation& m);
/// Succeeds iff the relation is complete and acyclic.
std::optional<LinearOrder> as_linear_order(const MajorityRelation& m);

/// V^D_xy: the orders of the domain ranking x above y, as indices into
/// the domain's canonical order list.
struct PairSupporters {
    int x = 0;
    int y = 0;
    std::vector<int> members;
};
PairSupporters supporters(const Domain& d, int x, int y);

/// Witness of Theorem 1(e) failure: three orders whose restrictions to
/// (x, y, z) form the forbidden Latin square
/// x R1 y R1 z,  y R2 z R2 x,  z R3 x R3 y.
struct CycleReport {
    std::array<LinearOrder, 3> orders;
    std::array<int, 3> alternatives;
};

/// Condorcet test via Sen's value restriction (Theorem 1(d)).
bool is_condorcet(const Domain& d);
/// Independent route: searches for a Latin square (Theorem 1(e)).
/// nullopt means none exists, i.e. the domain is Condorcet.
std::optional<CycleReport> latin_square_witness(const Domain& d);

/// True iff every order triple of the domain has its median inside it.
bool is_median_stable(const Domain& d);
/// Same predicate; median domains and closed Condorcet domains coincide,
/// and a triple-median fixpoint is closed under all odd profiles, so no
/// profiles of more than three voters ever need checking.
bool is_closed_condorcet(const Domain& d);

/// Triple-median fixpoint: the minimal closed Condorcet superdomain when
/// the input is Condorcet, otherwise the violating triple.
std::variant<Domain, CycleReport> closure(const Domain& d);

/// Interval-closure of the index subset within the domain.
bool is_convex(const Domain& d, std::span<const int> subset);
/// Helly property over all convex subsets: every pairwise-intersecting
/// family has a common element. Exponential sweep, refused for |d| > 12.
bool helly_holds(const Domain& d);

struct MaximalityResult {
    bool maximal = false;
    /// Lexicographically smallest addable order when not maximal.
    std::optional<LinearOrder> witness;
};
/// Precondition: is_condorcet(d). Non-maximality is always witnessed by a
/// single added order, so testing single additions is sufficient.
MaximalityResult is_maximal_condorcet(const Domain& d);

/// Labels a, b, c, ... for constructed and enumerated objects.
AltSetPtr default_alt_set(int n);

/// All maximal Condorcet domains on n alternatives, exact and complete,
/// in canonical order. Refused for n > 4.
std::vector<Domain> enumerate_maximal_condorcet(int n_alternatives);

}  // namespace condorcet
