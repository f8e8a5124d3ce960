#include "condorcet/domain.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "condorcet/common.hpp"

namespace condorcet {

Domain::Domain(AltSetPtr alts, std::vector<LinearOrder> orders)
    : alts_(std::move(alts)), orders_(std::move(orders)) {}

Domain Domain::from_orders(std::vector<LinearOrder> orders) {
    if (orders.empty()) throw std::invalid_argument("domain must not be empty");
    require_same_alt_set(orders);
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    AltSetPtr alts = orders.front().alt_set();
    return Domain(std::move(alts), std::move(orders));
}

std::optional<int> Domain::index_of(const LinearOrder& r) const {
    auto it = std::lower_bound(orders_.begin(), orders_.end(), r);
    if (it != orders_.end() && *it == r) return static_cast<int>(it - orders_.begin());
    return std::nullopt;
}

Profile::Profile(AltSetPtr alts, std::vector<Entry> entries, int total)
    : alts_(std::move(alts)), entries_(std::move(entries)), total_(total) {}

Profile Profile::from_entries(std::vector<Entry> entries) {
    if (entries.empty()) throw std::invalid_argument("profile must have at least one voter");
    int total = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second <= 0)
            throw std::invalid_argument("profile entry counts must be positive");
        if (!same_alt_set(entries[0].first.alt_set(), entries[i].first.alt_set()))
            throw std::invalid_argument("profile orders use different alternative sets");
        total += entries[i].second;
    }
    AltSetPtr alts = entries.front().first.alt_set();
    return Profile(std::move(alts), std::move(entries), total);
}

Profile Profile::from_orders(std::vector<LinearOrder> orders) {
    std::vector<Entry> entries;
    entries.reserve(orders.size());
    for (auto& r : orders) entries.emplace_back(std::move(r), 1);
    return from_entries(std::move(entries));
}

std::vector<LinearOrder> Profile::expand() const {
    std::vector<LinearOrder> out;
    out.reserve(static_cast<std::size_t>(total_));
    for (const auto& [order, count] : entries_)
        for (int i = 0; i < count; ++i) out.push_back(order);
    return out;
}

MajorityRelation::MajorityRelation(AltSetPtr alts, std::vector<std::vector<bool>> wins)
    : alts_(std::move(alts)), wins_(std::move(wins)) {
    if (!alts_) throw std::invalid_argument("null alternative set");
    const std::size_t n = static_cast<std::size_t>(alts_->size());
    if (wins_.size() != n) throw std::invalid_argument("wins matrix size mismatch");
    for (std::size_t x = 0; x < n; ++x) {
        if (wins_[x].size() != n) throw std::invalid_argument("wins matrix size mismatch");
        if (wins_[x][x]) throw std::invalid_argument("majority relation must be irreflexive");
        for (std::size_t y = 0; y < x; ++y)
            if (wins_[x][y] && wins_[y][x])
                throw std::invalid_argument("majority relation must be asymmetric");
    }
}

bool MajorityRelation::complete() const {
    const int n = size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!wins(x, y) && !wins(y, x)) return false;
    return true;
}

MajorityRelation majority_relation(const Profile& p) {
    const int n = p.alt_set()->size();
    std::vector<std::vector<bool>> wins(static_cast<std::size_t>(n),
                                        std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            long votes = 0;
            for (const auto& [order, count] : p.entries())
                if (order.prefers(x, y)) votes += count;
            if (2 * votes > p.total_voters())
                wins[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
        }
    return MajorityRelation(p.alt_set(), std::move(wins));
}

bool is_acyclic(const MajorityRelation& m) {
    const int n = m.size();
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (state[static_cast<std::size_t>(start)] != 0) continue;
        stack.push_back(start);
        std::vector<int> next(static_cast<std::size_t>(n), 0);
        state[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            int& j = next[static_cast<std::size_t>(v)];
            bool advanced = false;
            while (j < n) {
                const int w = j++;
                if (!m.wins(v, w)) continue;
                if (state[static_cast<std::size_t>(w)] == 1) return false;
                if (state[static_cast<std::size_t>(w)] == 0) {
                    state[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                    advanced = true;
                    break;
                }
            }
            if (!advanced && j >= n) {
                state[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::optional<LinearOrder> as_linear_order(const MajorityRelation& m) {
    if (!m.complete()) return std::nullopt;
    const int n = m.size();
    std::vector<std::vector<bool>> beats(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && m.wins(x, y)) beats[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
    return order_from_tournament(m.alt_set(), beats);
}

PairSupporters supporters(const Domain& d, int x, int y) {
    if (x == y) throw std::invalid_argument("supporters: alternatives must be distinct");
    PairSupporters out;
    out.x = x;
    out.y = y;
    for (int i = 0; i < d.size(); ++i)
        if (d.at(i).prefers(x, y)) out.members.push_back(i);
    return out;
}

bool is_condorcet(const Domain& d) {
    const int n = d.alt_set()->size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int triple[3] = {a, b, c};
                // seen[e][p]: element e of the triple occupies restricted rank p somewhere
                bool seen[3][3] = {};
                for (const auto& r : d.orders()) {
                    for (int e = 0; e < 3; ++e) {
                        int pos = 0;
                        for (int f = 0; f < 3; ++f)
                            if (f != e && r.prefers(triple[f], triple[e])) ++pos;
                        seen[e][pos] = true;
                    }
                }
                bool restricted = false;
                for (int e = 0; e < 3 && !restricted; ++e)
                    for (int p = 0; p < 3 && !restricted; ++p)
                        if (!seen[e][p]) restricted = true;
                if (!restricted) return false;
            }
    return true;
}

namespace {

// Restriction pattern of r on the sorted triple, as a rank of the
// permutation (0..5 in lexicographic order of the index sequence).
int triple_pattern(const LinearOrder& r, const int triple[3]) {
    int seq[3];
    int k = 0;
    for (int pos = 0; pos < r.size() && k < 3; ++pos) {
        const int alt = r.at(pos);
        for (int e = 0; e < 3; ++e)
            if (triple[e] == alt) seq[k++] = e;
    }
    static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p)
        if (kPerms[p][0] == seq[0] && kPerms[p][1] == seq[1] && kPerms[p][2] == seq[2]) return p;
    return -1;
}

// The two rotation orbits of S3; each is a forbidden Latin square.
constexpr int kOrbits[2][3] = {{0, 3, 4}, {1, 5, 2}};  // {xyz,yzx,zxy}, {xzy,zyx,yxz}
// (x, y, z) of the Latin-square pattern, as positions in the sorted triple,
// matching the first pattern of each orbit.
constexpr int kOrbitXYZ[2][3] = {{0, 1, 2}, {0, 2, 1}};

}  // namespace

std::optional<CycleReport> latin_square_witness(const Domain& d) {
    const int n = d.alt_set()->size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int triple[3] = {a, b, c};
                int rep[6];
                std::fill(rep, rep + 6, -1);
                for (int i = 0; i < d.size(); ++i) {
                    const int p = triple_pattern(d.at(i), triple);
                    if (rep[p] < 0) rep[p] = i;
                }
                for (int orb = 0; orb < 2; ++orb) {
                    const int p0 = kOrbits[orb][0], p1 = kOrbits[orb][1], p2 = kOrbits[orb][2];
                    if (rep[p0] >= 0 && rep[p1] >= 0 && rep[p2] >= 0) {
                        CycleReport report{{d.at(rep[p0]), d.at(rep[p1]), d.at(rep[p2])},
                                           {triple[kOrbitXYZ[orb][0]], triple[kOrbitXYZ[orb][1]],
                                            triple[kOrbitXYZ[orb][2]]}};
                        return report;
                    }
                }
            }
    return std::nullopt;
}

bool is_median_stable(const Domain& d) {
    const int m = d.size();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                const auto med = median_of_triple(d.at(i), d.at(j), d.at(k));
                if (!med || !d.contains(*med)) return false;
            }
    return true;
}

bool is_closed_condorcet(const Domain& d) { return is_median_stable(d); }

std::variant<Domain, CycleReport> closure(const Domain& d) {
    std::set<LinearOrder> members(d.orders().begin(), d.orders().end());
    std::vector<LinearOrder> list(members.begin(), members.end());
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t m = list.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    auto med = median_of_triple(list[i], list[j], list[k]);
                    if (!med) {
                        const auto witness =
                            latin_square_witness(Domain::from_orders({list[i], list[j], list[k]}));
                        if (!witness)
                            throw std::logic_error("cyclic triple without a Latin square");
                        return *witness;
                    }
                    if (members.insert(*med).second) {
                        list.push_back(std::move(*med));
                        grew = true;
                    }
                }
    }
    return Domain::from_orders(std::move(list));
}

bool is_convex(const Domain& d, std::span<const int> subset) {
    std::vector<bool> in(static_cast<std::size_t>(d.size()), false);
    for (int i : subset) {
        if (i < 0 || i >= d.size()) throw std::invalid_argument("is_convex: index out of range");
        in[static_cast<std::size_t>(i)] = true;
    }
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            const LinearOrder& ra = d.at(subset[a]);
            const LinearOrder& rb = d.at(subset[b]);
            for (int k = 0; k < d.size(); ++k)
                if (!in[static_cast<std::size_t>(k)] && is_between(d.at(k), ra, rb)) return false;
        }
    return true;
}

bool helly_holds(const Domain& d) {
    const int m = d.size();
    if (m > 12) throw guard_exceeded("helly_holds: refusing a domain with more than 12 orders");
    // Interval masks for all pairs.
    std::vector<std::uint32_t> imask(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::uint32_t mask = 0;
            for (int k = 0; k < m; ++k)
                if (is_between(d.at(k), d.at(i), d.at(j))) mask |= (1u << k);
            imask[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] = mask;
        }
    // All nonempty convex subsets.
    std::vector<std::uint32_t> convex;
    const std::uint32_t full = (1u << m) - 1u;
    for (std::uint32_t s = 1; s <= full; ++s) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(s & (1u << i))) continue;
            for (int j = i + 1; j < m && ok; ++j) {
                if (!(s & (1u << j))) continue;
                if ((imask[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                           static_cast<std::size_t>(j)] & ~s) != 0)
                    ok = false;
            }
        }
        if (ok) convex.push_back(s);
    }
    // Convex sets are closed under intersection, so by induction over the
    // family size the Helly property reduces to families of three.
    const std::size_t c = convex.size();
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b) {
            const std::uint32_t ab = convex[a] & convex[b];
            if (!ab) continue;
            for (std::size_t e = b + 1; e < c; ++e) {
                const std::uint32_t s = convex[e];
                if ((s & convex[a]) && (s & convex[b]) && !(s & ab)) return false;
            }
        }
    return true;
}

MaximalityResult is_maximal_condorcet(const Domain& d) {
    if (!is_condorcet(d))
        throw std::invalid_argument("is_maximal_condorcet: domain is not a Condorcet domain");
    for (const auto& q : all_orders(d.alt_set())) {
        if (d.contains(q)) continue;
        std::vector<LinearOrder> extended = d.orders();
        extended.push_back(q);
        if (is_condorcet(Domain::from_orders(std::move(extended))))
            return MaximalityResult{false, q};
    }
    return MaximalityResult{true, std::nullopt};
}

AltSetPtr default_alt_set(int n) {
    if (n < 1 || n > 26) throw std::invalid_argument("default_alt_set: need 1..26 alternatives");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return AlternativeSet::make(std::move(labels));
}

namespace {

struct MaximalSearch {
    int n_orders = 0;
    int n_triples = 0;
    // class id (0..5) of each order's restriction, per alternative triple
    std::vector<std::array<int, 8>> order_class;
    // present[t]: bitmask over the 6 classes currently in the chosen set
    std::array<int, 8> present{};
    std::array<std::array<int, 6>, 8> class_count{};
    std::vector<int> chosen;
    std::vector<char> in_chosen;
    std::vector<std::vector<int>> results;

    // Adding class c to triple t completes a Latin square iff the other
    // two classes of c's rotation orbit are already present.
    static bool completes_orbit(int mask, int c) {
        static const auto table = [] {
            std::array<std::array<bool, 6>, 64> t{};
            for (int m = 0; m < 64; ++m)
                for (const auto& orbit : kOrbits)
                    for (int i = 0; i < 3; ++i) {
                        const int others = (1 << orbit[(i + 1) % 3]) | (1 << orbit[(i + 2) % 3]);
                        if ((m & others) == others)
                            t[static_cast<std::size_t>(m)][static_cast<std::size_t>(orbit[i])] = true;
                    }
            return t;
        }();
        return table[static_cast<std::size_t>(mask)][static_cast<std::size_t>(c)];
    }

    bool compatible(int o) const {
        for (int t = 0; t < n_triples; ++t)
            if (completes_orbit(present[static_cast<std::size_t>(t)],
                                order_class[static_cast<std::size_t>(o)][static_cast<std::size_t>(t)]))
                return false;
        return true;
    }

    void add(int o) {
        for (int t = 0; t < n_triples; ++t) {
            const int c = order_class[static_cast<std::size_t>(o)][static_cast<std::size_t>(t)];
            if (class_count[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)]++ == 0)
                present[static_cast<std::size_t>(t)] |= (1 << c);
        }
        chosen.push_back(o);
        in_chosen[static_cast<std::size_t>(o)] = 1;
    }

    void remove(int o) {
        for (int t = 0; t < n_triples; ++t) {
            const int c = order_class[static_cast<std::size_t>(o)][static_cast<std::size_t>(t)];
            if (--class_count[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)] == 0)
                present[static_cast<std::size_t>(t)] &= ~(1 << c);
        }
        chosen.pop_back();
        in_chosen[static_cast<std::size_t>(o)] = 0;
    }

    void dfs(int i) {
        if (i == n_orders) {
            if (chosen.empty()) return;
            for (int o = 0; o < n_orders; ++o)
                if (!in_chosen[static_cast<std::size_t>(o)] && compatible(o)) return;
            results.push_back(chosen);
            return;
        }
        if (compatible(i)) {
            add(i);
            dfs(i + 1);
            remove(i);
        }
        dfs(i + 1);
    }
};

}  // namespace

std::vector<Domain> enumerate_maximal_condorcet(int n_alternatives) {
    if (n_alternatives < 2)
        throw std::invalid_argument("enumerate_maximal_condorcet: need at least 2 alternatives");
    if (n_alternatives > 4)
        throw guard_exceeded("enumerate_maximal_condorcet: refusing more than 4 alternatives");
    const AltSetPtr alts = default_alt_set(n_alternatives);
    const std::vector<LinearOrder> universe = all_orders(alts);

    MaximalSearch search;
    search.n_orders = static_cast<int>(universe.size());
    search.in_chosen.assign(universe.size(), 0);
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < n_alternatives; ++a)
        for (int b = a + 1; b < n_alternatives; ++b)
            for (int c = b + 1; c < n_alternatives; ++c) triples.push_back({a, b, c});
    search.n_triples = static_cast<int>(triples.size());
    search.order_class.assign(universe.size(), {});
    for (std::size_t o = 0; o < universe.size(); ++o)
        for (std::size_t t = 0; t < triples.size(); ++t) {
            const int triple[3] = {triples[t][0], triples[t][1], triples[t][2]};
            search.order_class[o][t] = triple_pattern(universe[o], triple);
        }
    search.dfs(0);

    std::sort(search.results.begin(), search.results.end());
    std::vector<Domain> out;
    out.reserve(search.results.size());
    for (const auto& indices : search.results) {
        std::vector<LinearOrder> orders;
        orders.reserve(indices.size());
        for (int i : indices) orders.push_back(universe[static_cast<std::size_t>(i)]);
        out.push_back(Domain::from_orders(std::move(orders)));
    }
    return out;
}

}  // namespace condorcet
