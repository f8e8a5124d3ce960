#include "condorcet/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "condorcet/domain_graph.hpp"
#include "condorcet/median_graph.hpp"

namespace condorcet {

ClonePolicy clone_policy_from_string(const std::string& name) {
    if (name == "first") return ClonePolicy::first;
    if (name == "last") return ClonePolicy::last;
    throw std::invalid_argument("unknown clone policy: " + name);
}

int choose_clone_target(const AlternativeSet& alts, ClonePolicy policy) {
    return policy == ClonePolicy::first ? 0 : alts.size() - 1;
}

namespace {

std::string fresh_clone_label(const std::vector<std::string>& labels, const std::string& seed) {
    std::string candidate = seed + "'";
    while (std::find(labels.begin(), labels.end(), candidate) != labels.end()) candidate += "'";
    return candidate;
}

LinearOrder insert_clone(const LinearOrder& order, const AltSetPtr& new_alts, int target,
                         int clone, bool target_above) {
    std::vector<std::uint8_t> ranking;
    ranking.reserve(order.ranking().size() + 1);
    for (std::uint8_t a : order.ranking()) {
        if (a == target && !target_above) ranking.push_back(static_cast<std::uint8_t>(clone));
        ranking.push_back(a);
        if (a == target && target_above) ranking.push_back(static_cast<std::uint8_t>(clone));
    }
    return LinearOrder(new_alts, std::move(ranking));
}

}  // namespace

Construction build_domain(const Graph& g, ClonePolicy policy) {
    const std::vector<ExpansionStep> steps = decompose(g);  // validates medianness

    std::vector<std::string> labels{"a"};
    AltSetPtr alts = AlternativeSet::make(labels);
    Graph replay = Graph::make(1, {});
    std::vector<LinearOrder> order_of(1, LinearOrder(alts, {0}));
    std::vector<std::pair<int, int>> clone_pairs;
    std::vector<std::string> log;

    for (const auto& step : steps) {
        const int target = choose_clone_target(*alts, policy);
        const std::string clone_label = fresh_clone_label(labels, labels[static_cast<std::size_t>(target)]);
        labels.push_back(clone_label);
        AltSetPtr new_alts = AlternativeSet::make(labels);
        const int clone = new_alts->size() - 1;

        const Graph expanded = apply_expansion(replay, step);
        std::vector<bool> in1(static_cast<std::size_t>(replay.n), false);
        std::vector<bool> in2(static_cast<std::size_t>(replay.n), false);
        for (int v : step.w1) in1[static_cast<std::size_t>(v)] = true;
        for (int v : step.w2) in2[static_cast<std::size_t>(v)] = true;
        // Second copies are appended by apply_expansion in increasing origin order.
        std::vector<int> copy_origin;
        for (int v = 0; v < replay.n; ++v)
            if (in1[static_cast<std::size_t>(v)] && in2[static_cast<std::size_t>(v)])
                copy_origin.push_back(v);

        std::vector<LinearOrder> next_orders;
        next_orders.reserve(static_cast<std::size_t>(expanded.n));
        for (int v = 0; v < replay.n; ++v) {
            const bool above = in1[static_cast<std::size_t>(v)];  // W1 side keeps x above y
            next_orders.push_back(insert_clone(order_of[static_cast<std::size_t>(v)], new_alts,
                                               target, clone, above));
        }
        for (int origin : copy_origin)
            next_orders.push_back(insert_clone(order_of[static_cast<std::size_t>(origin)], new_alts,
                                               target, clone, false));

        // Clone adjacency backs the value-restriction argument; it holds by
        // construction for the pair introduced in this step.
        for (const auto& r : next_orders)
            if (std::abs(r.rank_of(target) - r.rank_of(clone)) != 1)
                throw std::logic_error("build_domain: clone pair not adjacent");

        clone_pairs.emplace_back(target, clone);
        log.push_back("cloned " + labels[static_cast<std::size_t>(target)] + " -> " + clone_label +
                      " (split " + std::to_string(copy_origin.size()) + " vertices)");
        alts = std::move(new_alts);
        replay = expanded;
        order_of = std::move(next_orders);
    }

    Domain domain = Domain::from_orders(order_of);
    if (domain.size() != replay.n)
        throw std::logic_error("build_domain: constructed orders are not distinct");
    const DomainGraph dg = build_graph(domain);
    const auto phi = graph_isomorphic(g, dg.graph());
    if (!phi) throw std::logic_error("build_domain: constructed graph is not isomorphic to input");
    return Construction{std::move(domain), *phi, std::move(clone_pairs), std::move(log)};
}

}  // namespace condorcet
