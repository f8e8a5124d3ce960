#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace condorcet {

class AlternativeSet;
using AltSetPtr = std::shared_ptr<const AlternativeSet>;

/// The finite set of alternatives. Labels are distinct tokens; positions
/// 0..n-1 are the internal alternative indices. Labels only matter at I/O
/// boundaries, all computation is on indices.
class AlternativeSet {
public:
    static AltSetPtr make(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(std::string_view label) const;
    bool single_char_labels() const;

    friend bool operator==(const AlternativeSet& a, const AlternativeSet& b) {
        return a.labels_ == b.labels_;
    }

private:
    explicit AlternativeSet(std::vector<std::string> labels);
    std::vector<std::string> labels_;
};

bool same_alt_set(const AltSetPtr& a, const AltSetPtr& b);

/// A strict linear order over an AlternativeSet, stored as the ranking
/// permutation (most preferred first) plus its inverse for O(1) pair
/// queries. Immutable after construction.
class LinearOrder {
public:
    LinearOrder(AltSetPtr alts, std::vector<std::uint8_t> ranking);

    const AltSetPtr& alt_set() const { return alts_; }
    int size() const { return static_cast<int>(ranking_.size()); }

    /// Alternative occupying rank position `pos` (0 = most preferred).
    int at(int pos) const { return ranking_[static_cast<std::size_t>(pos)]; }
    int rank_of(int alternative) const { return rank_[static_cast<std::size_t>(alternative)]; }
    /// True iff x is ranked above y. x == y yields false.
    bool prefers(int x, int y) const { return rank_of(x) < rank_of(y); }
    /// The top-ranked alternative tau(R).
    int top() const { return ranking_.front(); }

    LinearOrder reversed() const;

    const std::vector<std::uint8_t>& ranking() const { return ranking_; }

    /// Order literal: concatenated tokens when all labels are one
    /// character, whitespace-separated otherwise.
    std::string to_string() const;

    /// Canonical comparison: lexicographic on the ranking permutation.
    std::strong_ordering operator<=>(const LinearOrder& other) const;
    bool operator==(const LinearOrder& other) const;

private:
    AltSetPtr alts_;
    std::vector<std::uint8_t> ranking_;
    std::vector<std::uint8_t> rank_;
};

/// Throws std::invalid_argument unless all orders share one alternative set.
void require_same_alt_set(std::span<const LinearOrder> orders);
void require_same_alt_set(const LinearOrder& a, const LinearOrder& b);
void require_same_alt_set(const LinearOrder& a, const LinearOrder& b, const LinearOrder& c);

/// Kemeny betweenness: q agrees with every pairwise comparison on which
/// r and rp agree.
bool is_between(const LinearOrder& q, const LinearOrder& r, const LinearOrder& rp);

/// The interval [r, rp] restricted to `universe`: all orders of the
/// universe that are Kemeny-between r and rp.
std::vector<LinearOrder> interval(const LinearOrder& r, const LinearOrder& rp,
                                  std::span<const LinearOrder> universe);

/// Majority relation of the triple, as a linear order when acyclic; by
/// the median/majority correspondence this is the unique median order.
std::optional<LinearOrder> median_of_triple(const LinearOrder& r1, const LinearOrder& r2,
                                            const LinearOrder& r3);

/// True iff the two orders agree on no pair of distinct alternatives.
bool are_completely_reversed(const LinearOrder& r, const LinearOrder& rp);

/// True iff the orders differ on exactly one pair, i.e. they are joined
/// by a single adjacent transposition (an edge of the permutohedron).
bool are_universal_neighbors(const LinearOrder& r, const LinearOrder& rp);

/// Number of pairs on which the two orders disagree (Kemeny distance).
int pair_difference_count(const LinearOrder& r, const LinearOrder& rp);

/// All n! linear orders over the set, canonically sorted. Guarded at
/// n <= 8 to keep the universe enumerable.
std::vector<LinearOrder> all_orders(const AltSetPtr& alts);

/// Reads a linear order off a complete dominance matrix; nullopt when the
/// tournament has a cycle.
std::optional<LinearOrder> order_from_tournament(const AltSetPtr& alts,
                                                 const std::vector<std::vector<bool>>& beats);

}  // namespace condorcet
