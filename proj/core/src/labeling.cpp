#include "iasi/labeling.hpp"

#include <algorithm>

#include <json.hpp>

#include "iasi/error.hpp"

namespace iasi {

void SetLabeling::assign(const VertexId& vertex, IntSet label) {
    assignments_.insert_or_assign(vertex, std::move(label));
}

bool SetLabeling::labels(const VertexId& vertex) const { return assignments_.contains(vertex); }

const IntSet& SetLabeling::at(const VertexId& vertex) const {
    auto it = assignments_.find(vertex);
    if (it == assignments_.end()) {
        throw Error("vertex '" + vertex + "' is not labeled");
    }
    return it->second;
}

IntSet induced_edge_label(const SetLabeling& f, const VertexId& u, const VertexId& v) {
    return sumset(f.at(u), f.at(v));
}

LabelingReport classify(const Graph& g, const SetLabeling& f) {
    LabelingReport report;

    report.vertex_injective = true;
    std::map<IntSet, VertexId> seen_vertex_labels;
    for (const auto& v : g.vertices()) {
        const IntSet& label = f.at(v);
        if (label.is_singleton()) report.mono_indexed_vertices.push_back(v);
        auto [it, inserted] = seen_vertex_labels.emplace(label, v);
        if (!inserted && report.vertex_injective) {
            report.vertex_injective = false;
            report.vertex_collision = std::make_pair(it->second, v);
        }
    }

    report.edge_injective = true;
    bool all_weak = true;
    bool all_strong = true;
    std::map<IntSet, Edge> seen_edge_labels;
    for (const auto& edge : g.edges()) {
        const IntSet& fu = f.at(edge.first);
        const IntSet& fv = f.at(edge.second);
        const IntSet label = sumset(fu, fv);
        const std::size_t index = label.cardinality();

        report.edge_index_numbers.emplace_back(edge, index);
        if (index == 1) report.mono_indexed_edges.push_back(edge);

        if (index != std::max(fu.cardinality(), fv.cardinality())) {
            all_weak = false;
            if (!report.weak_violation) report.weak_violation = edge;
        }
        if (index != fu.cardinality() * fv.cardinality()) {
            all_strong = false;
            if (!report.strong_violation) report.strong_violation = edge;
        }
        auto [it, inserted] = seen_edge_labels.emplace(label, edge);
        if (!inserted && report.edge_injective) {
            report.edge_injective = false;
            report.edge_collision = std::make_pair(it->second, edge);
        }
    }

    report.is_iasi = report.vertex_injective && report.edge_injective;
    report.is_weak = report.is_iasi && all_weak;
    report.is_strong = report.is_iasi && all_strong;

    if (!report.edge_index_numbers.empty()) {
        const std::size_t k = report.edge_index_numbers.front().second;
        const bool uniform = std::all_of(report.edge_index_numbers.begin(),
                                         report.edge_index_numbers.end(),
                                         [k](const auto& entry) { return entry.second == k; });
        if (uniform) report.uniform_k = k;
    }
    return report;
}

bool verify_symmetric_difference_set_indexer(const Graph& g, const SetLabeling& f) {
    std::vector<IntSet> vertex_labels;
    for (const auto& v : g.vertices()) vertex_labels.push_back(f.at(v));
    std::sort(vertex_labels.begin(), vertex_labels.end());
    if (std::adjacent_find(vertex_labels.begin(), vertex_labels.end()) != vertex_labels.end()) {
        return false;
    }

    std::vector<std::vector<std::uint64_t>> edge_labels;
    for (const auto& [u, v] : g.edges()) {
        auto label = symmetric_difference(f.at(u), f.at(v));
        if (label.empty()) return false;  // codomain excludes the empty set
        edge_labels.push_back(std::move(label));
    }
    std::sort(edge_labels.begin(), edge_labels.end());
    return std::adjacent_find(edge_labels.begin(), edge_labels.end()) == edge_labels.end();
}

SetLabeling restrict_to(const Graph& g, const SetLabeling& f, const Graph& h) {
    if (!h.is_subgraph_of(g)) {
        throw Error("restriction target is not a subgraph of the labeled graph");
    }
    SetLabeling restricted;
    for (const auto& v : h.vertices()) {
        restricted.assign(v, f.at(v));
    }
    return restricted;
}

std::string labeling_to_json(const SetLabeling& f) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [vertex, label] : f.assignments()) {
        out[vertex] = label.elements();
    }
    return out.dump();
}

SetLabeling labeling_from_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("labeling JSON parse error: ") + e.what());
    }
    if (!parsed.is_object()) {
        throw Error("labeling JSON must be an object mapping vertex ids to integer arrays");
    }
    SetLabeling f;
    for (const auto& [vertex, value] : parsed.items()) {
        if (!value.is_array() || value.empty()) {
            throw Error("label of vertex '" + vertex + "' must be a non-empty array");
        }
        std::vector<std::uint64_t> elements;
        for (const auto& item : value) {
            if (!item.is_number_unsigned()) {
                throw Error("label of vertex '" + vertex +
                            "' must contain only non-negative integers");
            }
            const std::uint64_t x = item.get<std::uint64_t>();
            if (!elements.empty() && x <= elements.back()) {
                throw Error("label of vertex '" + vertex + "' must be strictly increasing");
            }
            elements.push_back(x);
        }
        f.assign(vertex, IntSet(std::move(elements)));
    }
    return f;
}

}  // namespace iasi
