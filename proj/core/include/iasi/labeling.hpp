#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/intset.hpp"

namespace iasi {

/// A vertex -> IntSet assignment. Injectivity is a property of the labeling
/// against a graph and is checked by classify, not enforced structurally.
class SetLabeling {
public:
    SetLabeling() = default;
    explicit SetLabeling(std::map<VertexId, IntSet> assignments)
        : assignments_(std::move(assignments)) {}

    void assign(const VertexId& vertex, IntSet label);
    bool labels(const VertexId& vertex) const;
    const IntSet& at(const VertexId& vertex) const;  // throws on unlabeled vertex
    const std::map<VertexId, IntSet>& assignments() const noexcept { return assignments_; }
    std::size_t size() const noexcept { return assignments_.size(); }

    bool operator==(const SetLabeling&) const = default;

private:
    std::map<VertexId, IntSet> assignments_;
};

/// g_f(uv) = f(u) + f(v).
IntSet induced_edge_label(const SetLabeling& f, const VertexId& u, const VertexId& v);

/// Full classification of a labeling against a graph. Diagnostics carry the
/// first witness (in canonical edge order) of each violated property.
struct LabelingReport {
    bool vertex_injective = false;
    bool edge_injective = false;
    bool is_iasi = false;
    bool is_weak = false;
    bool is_strong = false;
    std::optional<std::size_t> uniform_k;  // unset for edgeless graphs
    std::vector<VertexId> mono_indexed_vertices;
    std::vector<Edge> mono_indexed_edges;
    std::vector<std::pair<Edge, std::size_t>> edge_index_numbers;  // canonical edge order

    std::optional<std::pair<VertexId, VertexId>> vertex_collision;
    std::optional<std::pair<Edge, Edge>> edge_collision;
    std::optional<Edge> weak_violation;    // first edge with |g_f(uv)| != max(|f(u)|,|f(v)|)
    std::optional<Edge> strong_violation;  // first edge with |g_f(uv)| != |f(u)|*|f(v)|

    std::size_t mono_indexed_edge_count() const noexcept { return mono_indexed_edges.size(); }
};

/// Requires every vertex of g to be labeled; extra assignments are ignored.
LabelingReport classify(const Graph& g, const SetLabeling& f);

/// Set-indexer in the symmetric-difference sense: f injective, every edge's
/// symmetric difference non-empty, and the induced edge map injective.
bool verify_symmetric_difference_set_indexer(const Graph& g, const SetLabeling& f);

/// Restriction of f to V(h); h must be a subgraph of g.
SetLabeling restrict_to(const Graph& g, const SetLabeling& f, const Graph& h);

/// JSON wire format: object mapping vertex id to a strictly increasing
/// array of non-negative integers, e.g. {"v1":[1],"v2":[0,2]}.
std::string labeling_to_json(const SetLabeling& f);
SetLabeling labeling_from_json(const std::string& text);

}  // namespace iasi
