#pragma once

#include <cstdint>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

/// Concrete label values used by the weak builders. Vertices outside the
/// independent set get singletons {2^rank}; distinct powers of two have
/// pairwise distinct sums, so the mono-indexed edge labels never collide.
/// Independent-set vertices get pairs {0, pair_offset * 4^j} with the offset
/// exceeding twice the largest singleton, which separates every remaining
/// edge label by its smallest element. Ranks are positions in the graph's
/// vertex order, so the whole scheme is deterministic.
struct ConstructionScheme {
    std::uint64_t pair_offset = 1;

    static ConstructionScheme for_graph(const Graph& g, const std::vector<bool>& in_set);
    std::uint64_t singleton_value(std::size_t rank) const;
    std::uint64_t pair_value(std::size_t pair_rank) const;
};

/// Weak IASI whose non-singleton vertices are exactly the given independent
/// set; the mono-indexed edges are exactly the edges avoiding it.
SetLabeling weak_from_independent_set(const Graph& g, const std::vector<VertexId>& independent);

/// Weak IASI of a bipartite graph with zero mono-indexed edges.
SetLabeling weak_bipartite(const Graph& g);

/// Weak IASI of a complete graph: one pair-labeled vertex, (n-1)(n-2)/2
/// mono-indexed edges.
SetLabeling weak_complete_on(const Graph& g);
SetLabeling weak_complete(std::size_t n);  // on Graph::complete(n), n >= 2

/// Weak IASI of an odd cycle with exactly one mono-indexed edge.
SetLabeling weak_odd_cycle_on(const Graph& g);
SetLabeling weak_odd_cycle(std::size_t n);  // on Graph::cycle(n), n odd

/// Weakly k-uniform IASI: every edge's label has cardinality exactly k.
/// k = 1 works on any graph (all-singleton labeling); k > 1 requires a
/// bipartite graph — no non-bipartite graph admits one.
SetLabeling weakly_k_uniform(const Graph& g, std::size_t k);

/// For a connected graph that is a single cycle: its vertices in traversal
/// order, starting at the first vertex and moving toward its first-listed
/// neighbor. Errors if g is not a cycle.
std::vector<VertexId> cycle_order(const Graph& g);

bool is_cycle_graph(const Graph& g);
bool is_complete_graph(const Graph& g);

}  // namespace iasi
