#include "iasi/construct.hpp"

#include <algorithm>

#include "iasi/error.hpp"

namespace iasi {

namespace {

std::uint64_t power_of_two(std::size_t exponent) {
    if (exponent >= 63) {
        throw Error("labeling scheme exhausted: singleton rank " + std::to_string(exponent) +
                    " exceeds the 63-bit element budget");
    }
    return std::uint64_t{1} << exponent;
}

std::vector<bool> membership(const Graph& g, const std::vector<VertexId>& set) {
    std::vector<bool> in_set(g.vertex_count(), false);
    for (const auto& v : set) {
        const std::size_t i = g.index_of(v);
        if (in_set[i]) {
            throw Error("duplicate vertex '" + v + "' in independent set");
        }
        in_set[i] = true;
    }
    return in_set;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : g.adjacent_indices(x)) {
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

}  // namespace

ConstructionScheme ConstructionScheme::for_graph(const Graph& g, const std::vector<bool>& in_set) {
    std::uint64_t max_singleton = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (!in_set[i]) max_singleton = power_of_two(i);
    }
    return ConstructionScheme{2 * max_singleton + 1};
}

std::uint64_t ConstructionScheme::singleton_value(std::size_t rank) const {
    return power_of_two(rank);
}

std::uint64_t ConstructionScheme::pair_value(std::size_t pair_rank) const {
    const std::size_t shift = 2 * pair_rank;
    if (shift >= 64 || pair_offset > (IntSet::max_element >> shift)) {
        throw Error("labeling scheme exhausted: pair rank " + std::to_string(pair_rank) +
                    " exceeds the 63-bit element budget");
    }
    return pair_offset << shift;
}

SetLabeling weak_from_independent_set(const Graph& g, const std::vector<VertexId>& independent) {
    const std::vector<bool> in_set = membership(g, independent);
    for (const auto& u : independent) {
        for (const auto& v : independent) {
            if (u < v && g.has_edge(u, v)) {
                throw Error("set is not independent: '" + u + "' and '" + v + "' are adjacent");
            }
        }
    }

    const ConstructionScheme scheme = ConstructionScheme::for_graph(g, in_set);
    SetLabeling f;
    std::size_t pair_rank = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const VertexId& v = g.vertex_at(i);
        if (in_set[i]) {
            f.assign(v, IntSet{0, scheme.pair_value(pair_rank++)});
        } else {
            f.assign(v, IntSet::singleton(scheme.singleton_value(i)));
        }
    }
    return f;
}

SetLabeling weak_bipartite(const Graph& g) {
    const BipartitenessResult check = bipartition_of(g);
    if (!check.is_bipartite()) {
        throw Error("graph is not bipartite (odd cycle through '" + check.odd_cycle.front() +
                    "')");
    }
    const auto& parts = *check.bipartition;
    auto incident_edges = [&g](const std::vector<VertexId>& part) {
        std::size_t total = 0;
        for (const auto& v : part) total += g.degree(v);
        return total;
    };
    // Both parts touch every edge exactly once, so this tie-breaks to part2.
    const auto& non_singleton_side =
        incident_edges(parts.part2) >= incident_edges(parts.part1) ? parts.part2 : parts.part1;
    return weak_from_independent_set(g, non_singleton_side);
}

bool is_cycle_graph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3 || g.edge_count() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (g.adjacent_indices(i).size() != 2) return false;
    }
    return is_connected(g);
}

bool is_complete_graph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

std::vector<VertexId> cycle_order(const Graph& g) {
    if (!is_cycle_graph(g)) {
        throw Error("graph is not a cycle");
    }
    std::vector<VertexId> order;
    order.reserve(g.vertex_count());
    std::size_t previous = SIZE_MAX;
    std::size_t current = 0;
    do {
        order.push_back(g.vertex_at(current));
        const auto& adj = g.adjacent_indices(current);
        const std::size_t next = adj[0] == previous ? adj[1] : adj[0];
        previous = current;
        current = next;
    } while (current != 0);
    return order;
}

SetLabeling weak_complete_on(const Graph& g) {
    if (!is_complete_graph(g) || g.vertex_count() < 2) {
        throw Error("weak complete labeling requires a complete graph with n >= 2");
    }
    return weak_from_independent_set(g, {g.vertex_at(0)});
}

SetLabeling weak_complete(std::size_t n) {
    if (n < 2) throw Error("weak complete labeling requires n >= 2");
    return weak_complete_on(Graph::complete(n));
}

SetLabeling weak_odd_cycle_on(const Graph& g) {
    if (!is_cycle_graph(g) || g.vertex_count() % 2 == 0) {
        throw Error("weak odd cycle labeling requires an odd cycle");
    }
    const std::vector<VertexId> order = cycle_order(g);
    std::vector<VertexId> alternating;
    for (std::size_t i = 1; i + 1 < order.size(); i += 2) {
        alternating.push_back(order[i]);
    }
    return weak_from_independent_set(g, alternating);
}

SetLabeling weak_odd_cycle(std::size_t n) {
    if (n < 3 || n % 2 == 0) {
        throw Error("weak odd cycle labeling requires odd n >= 3, got " + std::to_string(n));
    }
    return weak_odd_cycle_on(Graph::cycle(n));
}

SetLabeling weakly_k_uniform(const Graph& g, std::size_t k) {
    if (k < 1) throw Error("uniform labeling requires k >= 1");

    SetLabeling f;
    if (k == 1) {
        // All-singleton labeling; sums of distinct powers of two are distinct.
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            f.assign(g.vertex_at(i), IntSet::singleton(power_of_two(i)));
        }
        return f;
    }

    const BipartitenessResult check = bipartition_of(g);
    if (!check.is_bipartite()) {
        throw Error("no non-bipartite graph admits a weakly " + std::to_string(k) +
                    "-uniform labeling (odd cycle through '" + check.odd_cycle.front() + "')");
    }
    const auto& parts = *check.bipartition;
    const std::uint64_t stride = std::max<std::uint64_t>(parts.part1.size(), 1);
    for (std::size_t i = 0; i < parts.part1.size(); ++i) {
        f.assign(parts.part1[i], IntSet::singleton(i));
    }
    for (std::size_t j = 0; j < parts.part2.size(); ++j) {
        std::vector<std::uint64_t> run(k);
        const std::uint64_t base = stride * (j + 1);
        for (std::size_t c = 0; c < k; ++c) run[c] = base + c;
        f.assign(parts.part2[j], IntSet(std::move(run)));
    }
    return f;
}

}  // namespace iasi
