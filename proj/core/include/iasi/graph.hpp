#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace iasi {

using VertexId = std::string;

/// An undirected edge. Canonical orientation puts the endpoint that comes
/// first in the owning graph's vertex order in `first`.
using Edge = std::pair<VertexId, VertexId>;

/// Finite simple undirected graph with stable, insertion-ordered vertex ids.
/// Graphs are immutable values: transforms return new graphs. Isolated
/// vertices are allowed (contraction and reduction can create them).
class Graph {
public:
    Graph() = default;

    static Graph path(std::size_t n);                // n >= 1, vertices v1..vn
    static Graph cycle(std::size_t n);               // n >= 3
    static Graph complete(std::size_t n);            // n >= 1
    static Graph complete_bipartite(std::size_t m, std::size_t n);  // parts v1..vm | v(m+1)..v(m+n)

    /// Validates that edges are loop-free, unique and reference declared vertices.
    static Graph from_parts(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

    /// Edge-list text: one "u v" pair per line, `vertex u` lines declare
    /// isolated vertices, `#` starts a comment, blank lines are ignored.
    /// Errors name the offending line.
    static Graph from_edge_list(std::string_view text);

    /// Round-trips through from_edge_list, preserving vertex order.
    std::string to_edge_list() const;

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<VertexId>& vertices() const noexcept { return names_; }

    /// All edges in canonical order (sorted by endpoint positions).
    std::vector<Edge> edges() const;

    bool has_vertex(const VertexId& v) const;
    bool has_edge(const VertexId& u, const VertexId& v) const;
    std::size_t degree(const VertexId& v) const;
    std::vector<VertexId> neighbors(const VertexId& v) const;

    std::size_t index_of(const VertexId& v) const;  // position in vertices(); throws if unknown
    const VertexId& vertex_at(std::size_t index) const;
    const std::vector<std::size_t>& adjacent_indices(std::size_t index) const;

    Graph add_vertex(const VertexId& v) const;
    Graph add_edge(const VertexId& u, const VertexId& v) const;

    /// Removes uv and merges its endpoints into one vertex adjacent to
    /// (N(u) ∪ N(v)) \ {u,v}. The merged id is "u+v" (collision-suffixed)
    /// and takes u's position in the vertex order.
    Graph contract_edge(const VertexId& u, const VertexId& v) const;

    /// Elementary topological reduction: v must have degree 2 with
    /// non-adjacent neighbors u,w; deletes v and adds uw.
    Graph topological_reduce(const VertexId& v) const;

    /// Vertex and edge containment.
    bool is_subgraph_of(const Graph& host) const;

    /// Same vertex sequence and same edge set.
    bool operator==(const Graph& other) const;

private:
    std::size_t require_index(const VertexId& v) const;
    void insert_vertex(VertexId v);
    void insert_edge(std::size_t a, std::size_t b);
    bool has_edge_by_index(std::size_t a, std::size_t b) const;

    std::vector<VertexId> names_;
    std::unordered_map<VertexId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adjacency_;  // sorted neighbor positions
    std::size_t edge_count_ = 0;
};

struct Bipartition {
    std::vector<VertexId> part1;
    std::vector<VertexId> part2;
};

struct BipartitenessResult {
    std::optional<Bipartition> bipartition;
    std::vector<VertexId> odd_cycle;  // certificate, present iff not bipartite
    bool is_bipartite() const { return bipartition.has_value(); }
};

/// Deterministic 2-coloring: BFS from the first vertex of each component,
/// neighbors in vertex order; part1 collects the roots' color. Returns an
/// odd-cycle certificate when no proper 2-coloring exists.
BipartitenessResult bipartition_of(const Graph& g);

inline constexpr std::size_t independent_set_enumeration_limit = 30;

/// Visits every independent vertex set exactly once (including the empty
/// set), ordered by size then lexicographically by vertex position.
/// Refuses graphs above independent_set_enumeration_limit vertices.
void for_each_independent_set(const Graph& g,
                              const std::function<void(const std::vector<VertexId>&)>& visit);

std::vector<std::vector<VertexId>> independent_sets(const Graph& g);

bool is_independent_set(const Graph& g, const std::vector<VertexId>& set);

/// Seeded G(n,p); draws come straight from the engine so results are
/// reproducible across platforms.
Graph random_graph(std::size_t vertex_count, double edge_probability, std::mt19937_64& rng);

Graph random_bipartite(std::size_t part1_size, std::size_t part2_size, double edge_probability,
                       std::mt19937_64& rng);

}  // namespace iasi
