#include "condorcet/single_crossing.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "condorcet/common.hpp"
#include "condorcet/domain_graph.hpp"

namespace condorcet {

namespace {

std::uint64_t supporter_mask(const Domain& d, int x, int y) {
    std::uint64_t mask = 0;
    for (int i = 0; i < d.size(); ++i)
        if (d.at(i).prefers(x, y)) mask |= (std::uint64_t{1} << i);
    return mask;
}

void require_mask_width(const Domain& d, const char* what) {
    if (d.size() > 64)
        throw guard_exceeded(std::string(what) + ": refusing a domain with more than 64 orders");
}

}  // namespace

std::optional<std::vector<LinearOrder>> single_crossing_order(const Domain& d) {
    const DomainGraph dg = build_graph(d);
    const Graph& g = dg.graph();
    if (!is_chain(g)) return std::nullopt;
    if (g.n == 1) return std::vector<LinearOrder>{d.at(0)};
    int start = -1;
    for (int v = 0; v < g.n && start < 0; ++v)
        if (g.degree(v) == 1) start = v;  // canonical order makes this the lex-min endpoint
    std::vector<LinearOrder> out;
    out.reserve(static_cast<std::size_t>(g.n));
    int prev = -1, cur = start;
    while (true) {
        out.push_back(d.at(cur));
        int next = -1;
        for (int w : g.adj[static_cast<std::size_t>(cur)])
            if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
    }
    return out;
}

bool condition_4_2(const Domain& d) {
    require_mask_width(d, "condition_4_2");
    const int n = d.alt_set()->size();
    const std::uint64_t full = d.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d.size()) - 1);
    std::vector<std::uint64_t> sides;  // one orientation per nontrivial bipartition
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const std::uint64_t a = supporter_mask(d, x, y);
            if (a == 0 || a == full) continue;
            sides.push_back(a);
        }
    // Chain-orientability: pick V_xy or V_yx per pair so that the chosen
    // sets are pairwise nested; a pairwise-nested family is a chain.
    std::vector<std::uint64_t> chosen;
    auto comparable = [](std::uint64_t a, std::uint64_t b) {
        return (a & ~b) == 0 || (b & ~a) == 0;
    };
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == sides.size()) return true;
        for (const std::uint64_t cand : {sides[i], full & ~sides[i]}) {
            bool ok = true;
            for (const std::uint64_t prev : chosen)
                if (!comparable(cand, prev)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(cand);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool is_generalized_single_crossing(const Domain& d) {
    return is_tree(build_graph(d).graph());
}

bool supporter_family_helly(const Domain& d) {
    require_mask_width(d, "supporter_family_helly");
    const int n = d.alt_set()->size();
    std::set<std::uint64_t> family_set;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const std::uint64_t m = supporter_mask(d, x, y);
            if (m != 0) family_set.insert(m);
        }
    const std::vector<std::uint64_t> family(family_set.begin(), family_set.end());
    if (family.size() > 22)
        throw guard_exceeded("supporter_family_helly: refusing more than 22 distinct sets");
    const std::uint32_t subsets = 1u << family.size();
    for (std::uint32_t s = 0; s < subsets; ++s) {
        if (__builtin_popcount(s) < 3) continue;
        std::uint64_t common = ~std::uint64_t{0};
        bool pairwise = true;
        for (std::size_t i = 0; i < family.size() && pairwise; ++i) {
            if (!(s & (1u << i))) continue;
            common &= family[i];
            for (std::size_t j = i + 1; j < family.size() && pairwise; ++j)
                if ((s & (1u << j)) && (family[i] & family[j]) == 0) pairwise = false;
        }
        if (pairwise && common == 0) return false;
    }
    return true;
}

bool gsc_condition_4_3(const Domain& d) {
    require_mask_width(d, "gsc_condition_4_3");
    const int n = d.alt_set()->size();
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
            const auto [x, y] = pairs[p];
            const auto [z, w] = pairs[q];
            const std::uint64_t xy = supporter_mask(d, x, y);
            const std::uint64_t zw = supporter_mask(d, z, w);
            const std::uint64_t full =
                d.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d.size()) - 1);
            const std::uint64_t yx = full & ~xy;
            const std::uint64_t wz = full & ~zw;
            if ((xy & zw) && (xy & wz) && (yx & zw) && (yx & wz)) return false;
        }
    return true;
}

bool representative_voter_property(const Domain& d) {
    if (single_crossing_order(d).has_value()) return true;
    return d.size() == 4 && is_closed_condorcet(d) && is_cycle(build_graph(d).graph(), 4);
}

namespace {

ChainResult chain_error(std::string message) { return ChainResult{std::nullopt, std::move(message)}; }

}  // namespace

ChainResult chain_from_orders(std::vector<LinearOrder> seq) {
    if (seq.empty()) return chain_error("chain is empty");
    require_same_alt_set(seq);
    const int n = seq.front().size();
    const int expected = n * (n - 1) / 2 + 1;
    if (static_cast<int>(seq.size()) != expected)
        return chain_error("chain length " + std::to_string(seq.size()) + " != n(n-1)/2+1 = " +
                           std::to_string(expected));
    std::vector<std::pair<int, int>> switching;
    std::set<std::pair<int, int>> seen;  // unordered pairs, stored sorted
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        if (!are_universal_neighbors(seq[j], seq[j + 1]))
            return chain_error("consecutive orders " + seq[j].to_string() + ", " +
                               seq[j + 1].to_string() + " are not universal neighbors");
        int sx = -1, sy = -1;
        for (int x = 0; x < n && sx < 0; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && seq[j].prefers(x, y) && seq[j + 1].prefers(y, x)) {
                    sx = x;
                    sy = y;
                    break;
                }
        if (!seen.insert({std::min(sx, sy), std::max(sx, sy)}).second)
            return chain_error("pair {" + seq[j].alt_set()->label(sx) + "," +
                               seq[j].alt_set()->label(sy) + "} switches more than once");
        switching.emplace_back(sx, sy);
    }
    if (!are_completely_reversed(seq.front(), seq.back()))
        return chain_error("endpoint orders are not completely reversed");
    return ChainResult{MaximalChain{std::move(seq), std::move(switching)}, ""};
}

ChainResult extract_maximal_chain(const Domain& d) {
    const auto arrangement = single_crossing_order(d);
    if (!arrangement)
        return chain_error("domain is not single-crossing (associated graph is not a chain)");
    return chain_from_orders(*arrangement);
}

bool pairwise_concatenation(const MaximalChain& c) {
    for (std::size_t j = 0; j + 1 < c.switching_pairs.size(); ++j) {
        const auto [x1, y1] = c.switching_pairs[j];
        const auto [x2, y2] = c.switching_pairs[j + 1];
        if (x1 != x2 && x1 != y2 && y1 != x2 && y1 != y2) return false;
    }
    return true;
}

namespace {

using SwitchSeq = std::vector<std::pair<int, int>>;

// All switching sequences reachable by swapping adjacent disjoint pairs.
std::set<SwitchSeq> equivalence_class(const MaximalChain& c) {
    std::set<SwitchSeq> visited{c.switching_pairs};
    std::vector<SwitchSeq> frontier{c.switching_pairs};
    const std::size_t guard = default_guard();
    while (!frontier.empty()) {
        std::vector<SwitchSeq> next;
        for (const auto& seq : frontier)
            for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
                const auto [x1, y1] = seq[j];
                const auto [x2, y2] = seq[j + 1];
                if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2) continue;
                SwitchSeq swapped = seq;
                std::swap(swapped[j], swapped[j + 1]);
                if (visited.insert(swapped).second) next.push_back(std::move(swapped));
                if (visited.size() > guard)
                    throw guard_exceeded("chain equivalence class exceeds the search guard");
            }
        frontier = std::move(next);
    }
    return visited;
}

// Rebuilds the chain orders from R1 along a switching sequence.
std::vector<LinearOrder> replay_chain(const LinearOrder& first, const SwitchSeq& seq) {
    std::vector<LinearOrder> orders{first};
    for (const auto& [x, y] : seq) {
        const LinearOrder& cur = orders.back();
        const int rx = cur.rank_of(x);
        if (cur.rank_of(y) != rx + 1)
            throw std::logic_error("replay_chain: switching pair is not adjacent");
        std::vector<std::uint8_t> ranking = cur.ranking();
        std::swap(ranking[static_cast<std::size_t>(rx)], ranking[static_cast<std::size_t>(rx) + 1]);
        orders.emplace_back(cur.alt_set(), std::move(ranking));
    }
    return orders;
}

}  // namespace

bool chains_equivalent(const MaximalChain& c1, const MaximalChain& c2) {
    if (!same_alt_set(c1.alt_set(), c2.alt_set()))
        throw std::invalid_argument("chains_equivalent: different alternative sets");
    if (c1.switching_pairs.size() != c2.switching_pairs.size()) return false;
    return equivalence_class(c1).count(c2.switching_pairs) > 0;
}

Domain equivalence_closure(const MaximalChain& c) {
    std::vector<LinearOrder> all;
    for (const auto& seq : equivalence_class(c)) {
        auto orders = replay_chain(c.orders.front(), seq);
        all.insert(all.end(), orders.begin(), orders.end());
    }
    return Domain::from_orders(std::move(all));
}

bool maximal_sc_is_maximal_condorcet(const MaximalChain& c) { return pairwise_concatenation(c); }

}  // namespace condorcet
