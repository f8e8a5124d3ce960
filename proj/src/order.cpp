#include "condorcet/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "condorcet/common.hpp"

namespace condorcet {

AlternativeSet::AlternativeSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("alternative set must not be empty");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("empty alternative label");
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate alternative label: " + l);
    }
}

AltSetPtr AlternativeSet::make(std::vector<std::string> labels) {
    return AltSetPtr(new AlternativeSet(std::move(labels)));
}

std::optional<int> AlternativeSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

bool AlternativeSet::single_char_labels() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [](const std::string& l) { return l.size() == 1; });
}

bool same_alt_set(const AltSetPtr& a, const AltSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

LinearOrder::LinearOrder(AltSetPtr alts, std::vector<std::uint8_t> ranking)
    : alts_(std::move(alts)), ranking_(std::move(ranking)) {
    if (!alts_) throw std::invalid_argument("null alternative set");
    const std::size_t n = static_cast<std::size_t>(alts_->size());
    if (ranking_.size() != n) throw std::invalid_argument("ranking length mismatch");
    rank_.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::uint8_t a = ranking_[pos];
        if (a >= n || seen[a]) throw std::invalid_argument("ranking is not a permutation");
        seen[a] = true;
        rank_[a] = static_cast<std::uint8_t>(pos);
    }
}

LinearOrder LinearOrder::reversed() const {
    std::vector<std::uint8_t> r(ranking_.rbegin(), ranking_.rend());
    return LinearOrder(alts_, std::move(r));
}

std::string LinearOrder::to_string() const {
    std::string out;
    const bool compact = alts_->single_char_labels();
    for (std::size_t pos = 0; pos < ranking_.size(); ++pos) {
        if (!compact && pos > 0) out += ' ';
        out += alts_->label(ranking_[pos]);
    }
    return out;
}

std::strong_ordering LinearOrder::operator<=>(const LinearOrder& other) const {
    if (auto c = alts_->labels() <=> other.alts_->labels(); c != std::strong_ordering::equal)
        return c;
    return ranking_ <=> other.ranking_;
}

bool LinearOrder::operator==(const LinearOrder& other) const {
    return ranking_ == other.ranking_ && same_alt_set(alts_, other.alts_);
}

void require_same_alt_set(std::span<const LinearOrder> orders) {
    for (std::size_t i = 1; i < orders.size(); ++i)
        if (!same_alt_set(orders[0].alt_set(), orders[i].alt_set()))
            throw std::invalid_argument("orders use different alternative sets");
}

void require_same_alt_set(const LinearOrder& a, const LinearOrder& b) {
    if (!same_alt_set(a.alt_set(), b.alt_set()))
        throw std::invalid_argument("orders use different alternative sets");
}

void require_same_alt_set(const LinearOrder& a, const LinearOrder& b, const LinearOrder& c) {
    require_same_alt_set(a, b);
    require_same_alt_set(a, c);
}

bool is_between(const LinearOrder& q, const LinearOrder& r, const LinearOrder& rp) {
    require_same_alt_set(q, r, rp);
    const int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (r.prefers(x, y) && rp.prefers(x, y) && !q.prefers(x, y)) return false;
            if (r.prefers(y, x) && rp.prefers(y, x) && !q.prefers(y, x)) return false;
        }
    return true;
}

std::vector<LinearOrder> interval(const LinearOrder& r, const LinearOrder& rp,
                                  std::span<const LinearOrder> universe) {
    if (universe.empty()) throw std::invalid_argument("interval: empty universe");
    std::vector<LinearOrder> out;
    for (const auto& q : universe)
        if (is_between(q, r, rp)) out.push_back(q);
    return out;
}

// Complete acyclic tournaments have pairwise-distinct out-degrees; sorting
// by out-degree and verifying every pair recovers the order or proves a cycle.
std::optional<LinearOrder> order_from_tournament(const AltSetPtr& alts,
                                                 const std::vector<std::vector<bool>>& beats) {
    const int n = alts->size();
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (beats[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) ++outdeg[static_cast<std::size_t>(x)];
    std::vector<std::uint8_t> ranking(static_cast<std::size_t>(n));
    std::iota(ranking.begin(), ranking.end(), static_cast<std::uint8_t>(0));
    std::stable_sort(ranking.begin(), ranking.end(), [&](std::uint8_t a, std::uint8_t b) {
        return outdeg[a] > outdeg[b];
    });
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!beats[ranking[static_cast<std::size_t>(i)]][ranking[static_cast<std::size_t>(j)]])
                return std::nullopt;
    return LinearOrder(alts, std::move(ranking));
}

std::optional<LinearOrder> median_of_triple(const LinearOrder& r1, const LinearOrder& r2,
                                            const LinearOrder& r3) {
    require_same_alt_set(r1, r2, r3);
    const int n = r1.size();
    std::vector<std::vector<bool>> beats(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const int votes = (r1.prefers(x, y) ? 1 : 0) + (r2.prefers(x, y) ? 1 : 0) +
                              (r3.prefers(x, y) ? 1 : 0);
            if (votes >= 2) beats[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
        }
    return order_from_tournament(r1.alt_set(), beats);
}

bool are_completely_reversed(const LinearOrder& r, const LinearOrder& rp) {
    require_same_alt_set(r, rp);
    const int n = r.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (r.prefers(x, y) == rp.prefers(x, y)) return false;
    return true;
}

int pair_difference_count(const LinearOrder& r, const LinearOrder& rp) {
    require_same_alt_set(r, rp);
    const int n = r.size();
    int count = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (r.prefers(x, y) != rp.prefers(x, y)) ++count;
    return count;
}

bool are_universal_neighbors(const LinearOrder& r, const LinearOrder& rp) {
    return pair_difference_count(r, rp) == 1;
}

std::vector<LinearOrder> all_orders(const AltSetPtr& alts) {
    const int n = alts->size();
    if (n > 8) throw guard_exceeded("all_orders: refusing a universe with more than 8 alternatives");
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), static_cast<std::uint8_t>(0));
    std::vector<LinearOrder> out;
    do {
        out.emplace_back(alts, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace condorcet
