#include "iasi/sparing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "iasi/construct.hpp"
#include "iasi/error.hpp"

namespace iasi {

namespace {

std::vector<VertexId> names_of(const Graph& g, const std::vector<std::size_t>& indices) {
    std::vector<VertexId> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(g.vertex_at(i));
    return out;
}

SparingResult finish(const Graph& g, std::size_t value, std::vector<VertexId> witness,
                     SparingMethod method, std::uint64_t nodes) {
    SparingResult result;
    result.value = value;
    result.witness_set = std::move(witness);
    result.witness_labeling = weak_from_independent_set(g, result.witness_set);
    result.method = method;
    result.nodes_explored = nodes;

    const LabelingReport report = classify(g, result.witness_labeling);
    if (!report.is_weak || report.mono_indexed_edge_count() != result.value) {
        throw Error("internal error: sparing witness failed verification");
    }
    return result;
}

// Preferred witness order: fewer vertices first, then lexicographic by
// vertex position. Matches size-then-lex enumeration order.
bool witness_precedes(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct ExhaustiveSearch {
    const Graph& g;
    std::size_t n;
    std::vector<std::uint32_t> adjacency_mask;
    std::size_t best_value;
    std::vector<std::size_t> best_set;
    bool found = false;
    std::uint64_t evaluated = 0;
    std::vector<std::size_t> current;

    explicit ExhaustiveSearch(const Graph& graph)
        : g(graph), n(graph.vertex_count()), adjacency_mask(n, 0), best_value(0) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j : g.adjacent_indices(i)) {
                adjacency_mask[i] |= std::uint32_t{1} << j;
            }
        }
    }

    // DFS over vertices in order; `outside_edges` counts edges with both
    // endpoints already decided out.
    void run(std::size_t next, std::uint32_t chosen_mask, std::uint32_t out_mask,
             std::size_t outside_edges) {
        if (next == n) {
            ++evaluated;
            if (!found || outside_edges < best_value ||
                (outside_edges == best_value && witness_precedes(current, best_set))) {
                found = true;
                best_value = outside_edges;
                best_set = current;
            }
            return;
        }
        if (!(adjacency_mask[next] & chosen_mask)) {
            current.push_back(next);
            run(next + 1, chosen_mask | (std::uint32_t{1} << next), out_mask, outside_edges);
            current.pop_back();
        }
        const std::size_t newly_forced = std::popcount(adjacency_mask[next] & out_mask);
        run(next + 1, chosen_mask, out_mask | (std::uint32_t{1} << next),
            outside_edges + newly_forced);
    }
};

struct BranchAndBound {
    const Graph& g;
    std::size_t n;
    std::vector<std::size_t> order;  // max degree first, ties by position
    enum class State : unsigned char { undecided, in, out };
    std::vector<State> state;
    std::size_t best_value;
    std::vector<std::size_t> best_set;
    bool found = false;
    std::uint64_t nodes = 0;

    explicit BranchAndBound(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
            return g.adjacent_indices(a).size() > g.adjacent_indices(b).size();
        });
        state.assign(n, State::undecided);
        best_value = g.edge_count() + 1;
    }

    std::size_t edges_to_out(std::size_t v) const {
        std::size_t count = 0;
        for (std::size_t w : g.adjacent_indices(v)) {
            if (state[w] == State::out) ++count;
        }
        return count;
    }

    void record_leaf(std::size_t forced) {
        std::vector<std::size_t> in_set;
        for (std::size_t i = 0; i < n; ++i) {
            if (state[i] == State::in) in_set.push_back(i);
        }
        best_value = forced;
        best_set = std::move(in_set);
        found = true;
    }

    void search(std::size_t position, std::size_t forced) {
        ++nodes;
        if (forced >= best_value) return;  // bound is admissible: forced edges stay mono
        while (position < n && state[order[position]] != State::undecided) ++position;
        if (position == n) {
            record_leaf(forced);
            return;
        }
        const std::size_t v = order[position];

        // Branch 1: v joins the independent set; undecided neighbors go out.
        state[v] = State::in;
        std::vector<std::size_t> forced_out;
        std::size_t added = 0;
        for (std::size_t w : g.adjacent_indices(v)) {
            if (state[w] == State::undecided) {
                added += edges_to_out(w);
                state[w] = State::out;
                forced_out.push_back(w);
            }
        }
        search(position + 1, forced + added);
        for (std::size_t w : forced_out) state[w] = State::undecided;

        // Branch 2: v stays out.
        state[v] = State::out;
        search(position + 1, forced + edges_to_out(v));
        state[v] = State::undecided;
    }
};

}  // namespace

std::string to_string(SparingMethod method) {
    switch (method) {
        case SparingMethod::closed_form: return "closed_form";
        case SparingMethod::exhaustive: return "exhaustive";
        case SparingMethod::branch_and_bound: return "branch_and_bound";
    }
    return "unknown";
}

SparingResult sparing_exhaustive(const Graph& g) {
    if (g.vertex_count() > exhaustive_vertex_limit) {
        throw Error("exhaustive sparing search is limited to " +
                    std::to_string(exhaustive_vertex_limit) + " vertices, got " +
                    std::to_string(g.vertex_count()));
    }
    ExhaustiveSearch search(g);
    search.run(0, 0, 0, 0);
    return finish(g, search.best_value, names_of(g, search.best_set), SparingMethod::exhaustive,
                  search.evaluated);
}

SparingResult sparing_branch_and_bound(const Graph& g) {
    if (g.vertex_count() > branch_and_bound_vertex_limit) {
        throw Error("branch-and-bound sparing search is limited to " +
                    std::to_string(branch_and_bound_vertex_limit) + " vertices, got " +
                    std::to_string(g.vertex_count()));
    }
    BranchAndBound search(g);
    search.search(0, 0);
    std::sort(search.best_set.begin(), search.best_set.end());
    return finish(g, search.best_value, names_of(g, search.best_set),
                  SparingMethod::branch_and_bound, search.nodes);
}

std::optional<SparingResult> sparing_closed_form(const Graph& g) {
    const std::size_t n = g.vertex_count();

    const BipartitenessResult check = bipartition_of(g);
    if (check.is_bipartite()) {
        const auto& parts = *check.bipartition;
        const auto& side = parts.part2;  // either part covers every edge
        return finish(g, 0, side, SparingMethod::closed_form, 0);
    }
    if (is_cycle_graph(g)) {
        // Not bipartite, so the cycle is odd: one mono-indexed edge.
        const std::vector<VertexId> order = cycle_order(g);
        std::vector<VertexId> alternating;
        for (std::size_t i = 1; i + 1 < order.size(); i += 2) alternating.push_back(order[i]);
        return finish(g, 1, alternating, SparingMethod::closed_form, 0);
    }
    if (is_complete_graph(g)) {
        return finish(g, (n - 1) * (n - 2) / 2, {g.vertex_at(0)}, SparingMethod::closed_form, 0);
    }
    return std::nullopt;
}

SparingResult sparing(const Graph& g) {
    if (auto closed = sparing_closed_form(g)) {
        return *std::move(closed);
    }
    return sparing_branch_and_bound(g);
}

bool mono_indexed_count_parity_check(std::size_t n) {
    if (n < 3 || n > 16) {
        throw Error("parity check covers 3 <= n <= 16, got " + std::to_string(n));
    }
    const Graph g = Graph::cycle(n);
    const std::vector<Edge> edges = g.edges();
    bool all_match = true;
    for_each_independent_set(g, [&](const std::vector<VertexId>& set) {
        std::size_t outside = 0;
        for (const auto& [u, v] : edges) {
            const bool u_in = std::find(set.begin(), set.end(), u) != set.end();
            const bool v_in = std::find(set.begin(), set.end(), v) != set.end();
            if (!u_in && !v_in) ++outside;
        }
        if (outside % 2 != n % 2) all_match = false;
    });
    return all_match;
}

}  // namespace iasi
