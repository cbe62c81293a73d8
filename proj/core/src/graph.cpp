#include "iasi/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "iasi/error.hpp"

namespace iasi {

namespace {

VertexId canonical_name(std::size_t one_based) { return "v" + std::to_string(one_based); }

double unit_draw(std::mt19937_64& rng) {
    // 53 random bits mapped to [0,1); bit-exact on every platform.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::size_t Graph::require_index(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) {
        throw Error("unknown vertex '" + v + "'");
    }
    return it->second;
}

void Graph::insert_vertex(VertexId v) {
    if (v.empty()) {
        throw Error("vertex id must be non-empty");
    }
    if (index_.contains(v)) {
        throw Error("duplicate vertex '" + v + "'");
    }
    index_.emplace(v, names_.size());
    names_.push_back(std::move(v));
    adjacency_.emplace_back();
}

bool Graph::has_edge_by_index(std::size_t a, std::size_t b) const {
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

void Graph::insert_edge(std::size_t a, std::size_t b) {
    if (a == b) {
        throw Error("loop edge at '" + names_[a] + "' is not allowed");
    }
    if (has_edge_by_index(a, b)) {
        throw Error("duplicate edge '" + names_[a] + " " + names_[b] + "'");
    }
    auto& adj_a = adjacency_[a];
    adj_a.insert(std::lower_bound(adj_a.begin(), adj_a.end(), b), b);
    auto& adj_b = adjacency_[b];
    adj_b.insert(std::lower_bound(adj_b.begin(), adj_b.end(), a), a);
    ++edge_count_;
}

Graph Graph::path(std::size_t n) {
    if (n < 1) throw Error("path requires n >= 1");
    Graph g;
    for (std::size_t i = 1; i <= n; ++i) g.insert_vertex(canonical_name(i));
    for (std::size_t i = 0; i + 1 < n; ++i) g.insert_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw Error("cycle requires n >= 3");
    Graph g = path(n);
    g.insert_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(std::size_t n) {
    if (n < 1) throw Error("complete requires n >= 1");
    Graph g;
    for (std::size_t i = 1; i <= n; ++i) g.insert_vertex(canonical_name(i));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.insert_edge(i, j);
    }
    return g;
}

Graph Graph::complete_bipartite(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw Error("complete_bipartite requires m,n >= 1");
    Graph g;
    for (std::size_t i = 1; i <= m + n; ++i) g.insert_vertex(canonical_name(i));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = m; j < m + n; ++j) g.insert_edge(i, j);
    }
    return g;
}

Graph Graph::from_parts(std::vector<VertexId> vertices, const std::vector<Edge>& edges) {
    Graph g;
    for (auto& v : vertices) g.insert_vertex(std::move(v));
    for (const auto& [u, v] : edges) {
        g.insert_edge(g.require_index(u), g.require_index(v));
    }
    return g;
}

Graph Graph::from_edge_list(std::string_view text) {
    Graph g;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_number;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream tokens{std::string(line)};
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) words.push_back(std::move(w));
        if (words.empty()) continue;

        auto ensure = [&g](const VertexId& v) {
            if (!g.index_.contains(v)) g.insert_vertex(v);
        };
        try {
            if (words[0] == "vertex") {
                if (words.size() != 2) {
                    throw Error("expected 'vertex <id>'");
                }
                ensure(words[1]);
            } else if (words.size() == 2) {
                ensure(words[0]);
                ensure(words[1]);
                g.insert_edge(g.index_.at(words[0]), g.index_.at(words[1]));
            } else {
                throw Error("expected 'u v' or 'vertex u', got " + std::to_string(words.size()) +
                            " tokens");
            }
        } catch (const Error& e) {
            throw Error("edge list line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return g;
}

std::string Graph::to_edge_list() const {
    std::string out;
    for (const auto& v : names_) {
        out += "vertex " + v + "\n";
    }
    for (const auto& [u, v] : edges()) {
        out += u + " " + v + "\n";
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
        for (std::size_t j : adjacency_[i]) {
            if (j > i) out.emplace_back(names_[i], names_[j]);
        }
    }
    return out;
}

bool Graph::has_vertex(const VertexId& v) const { return index_.contains(v); }

bool Graph::has_edge(const VertexId& u, const VertexId& v) const {
    return has_edge_by_index(require_index(u), require_index(v));
}

std::size_t Graph::degree(const VertexId& v) const { return adjacency_[require_index(v)].size(); }

std::vector<VertexId> Graph::neighbors(const VertexId& v) const {
    std::vector<VertexId> out;
    for (std::size_t i : adjacency_[require_index(v)]) out.push_back(names_[i]);
    return out;
}

std::size_t Graph::index_of(const VertexId& v) const { return require_index(v); }

const VertexId& Graph::vertex_at(std::size_t index) const {
    if (index >= names_.size()) {
        throw Error("vertex index " + std::to_string(index) + " out of range");
    }
    return names_[index];
}

const std::vector<std::size_t>& Graph::adjacent_indices(std::size_t index) const {
    if (index >= adjacency_.size()) {
        throw Error("vertex index " + std::to_string(index) + " out of range");
    }
    return adjacency_[index];
}

Graph Graph::add_vertex(const VertexId& v) const {
    Graph g = *this;
    g.insert_vertex(v);
    return g;
}

Graph Graph::add_edge(const VertexId& u, const VertexId& v) const {
    Graph g = *this;
    g.insert_edge(g.require_index(u), g.require_index(v));
    return g;
}

Graph Graph::contract_edge(const VertexId& u, const VertexId& v) const {
    const std::size_t iu = require_index(u);
    const std::size_t iv = require_index(v);
    if (!has_edge_by_index(iu, iv)) {
        throw Error("unknown edge '" + u + " " + v + "'");
    }
    const std::size_t keep = std::min(iu, iv);
    const std::size_t drop = std::max(iu, iv);

    VertexId merged = names_[keep] + "+" + names_[drop];
    for (std::size_t suffix = 2; index_.contains(merged); ++suffix) {
        merged = names_[keep] + "+" + names_[drop] + "_" + std::to_string(suffix);
    }

    Graph g;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i == drop) continue;
        g.insert_vertex(i == keep ? merged : names_[i]);
    }
    auto mapped = [&](std::size_t old) { return g.index_.at(old == drop ? merged : names_[old]); };
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
        for (std::size_t j : adjacency_[i]) {
            if (j < i) continue;
            if ((i == keep && j == drop)) continue;  // the contracted edge itself
            const std::size_t a = (i == keep || i == drop) ? g.index_.at(merged) : mapped(i);
            const std::size_t b = (j == keep || j == drop) ? g.index_.at(merged) : mapped(j);
            if (!g.has_edge_by_index(a, b)) g.insert_edge(a, b);  // parallel edges merge
        }
    }
    return g;
}

Graph Graph::topological_reduce(const VertexId& v) const {
    const std::size_t iv = require_index(v);
    const auto& adj = adjacency_[iv];
    if (adj.size() != 2) {
        throw Error("topological reduction requires degree 2, '" + v + "' has degree " +
                    std::to_string(adj.size()));
    }
    const std::size_t iu = adj[0];
    const std::size_t iw = adj[1];
    if (has_edge_by_index(iu, iw)) {
        throw Error("topological reduction requires non-adjacent neighbors, '" + names_[iu] +
                    "' and '" + names_[iw] + "' are adjacent");
    }
    Graph g;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i != iv) g.insert_vertex(names_[i]);
    }
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
        if (i == iv) continue;
        for (std::size_t j : adjacency_[i]) {
            if (j <= i || j == iv) continue;
            g.insert_edge(g.index_.at(names_[i]), g.index_.at(names_[j]));
        }
    }
    g.insert_edge(g.index_.at(names_[iu]), g.index_.at(names_[iw]));
    return g;
}

bool Graph::is_subgraph_of(const Graph& host) const {
    for (const auto& v : names_) {
        if (!host.has_vertex(v)) return false;
    }
    for (const auto& [u, v] : edges()) {
        if (!host.has_edge(u, v)) return false;
    }
    return true;
}

bool Graph::operator==(const Graph& other) const {
    return names_ == other.names_ && adjacency_ == other.adjacency_;
}

BipartitenessResult bipartition_of(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<std::size_t> parent(n, SIZE_MAX);
    std::vector<std::size_t> depth(n, 0);

    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y : g.adjacent_indices(x)) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    // Conflict edge closes an odd cycle through the BFS forest.
                    std::vector<std::size_t> from_x{x};
                    std::vector<std::size_t> from_y{y};
                    std::size_t a = x;
                    std::size_t b = y;
                    while (depth[a] > depth[b]) from_x.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) from_y.push_back(b = parent[b]);
                    while (a != b) {
                        from_x.push_back(a = parent[a]);
                        from_y.push_back(b = parent[b]);
                    }
                    // Cycle: lca..x along the tree, the conflict edge xy,
                    // then y back up to the child of the lca.
                    std::vector<VertexId> cycle;
                    for (auto it = from_x.rbegin(); it != from_x.rend(); ++it) {
                        cycle.push_back(g.vertex_at(*it));
                    }
                    for (std::size_t i = 0; i + 1 < from_y.size(); ++i) {
                        cycle.push_back(g.vertex_at(from_y[i]));
                    }
                    return {std::nullopt, std::move(cycle)};
                }
            }
        }
    }

    Bipartition parts;
    for (std::size_t i = 0; i < n; ++i) {
        (color[i] == 0 ? parts.part1 : parts.part2).push_back(g.vertex_at(i));
    }
    return {std::move(parts), {}};
}

namespace {

void enumerate_k_subsets(const Graph& g, std::size_t k, std::size_t start,
                         std::vector<std::size_t>& chosen,
                         const std::function<void(const std::vector<VertexId>&)>& visit) {
    if (chosen.size() == k) {
        std::vector<VertexId> named;
        named.reserve(k);
        for (std::size_t i : chosen) named.push_back(g.vertex_at(i));
        visit(named);
        return;
    }
    const std::size_t n = g.vertex_count();
    for (std::size_t i = start; i + (k - chosen.size()) <= n; ++i) {
        const auto& adj = g.adjacent_indices(i);
        bool independent = true;
        for (std::size_t c : chosen) {
            if (std::binary_search(adj.begin(), adj.end(), c)) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        chosen.push_back(i);
        enumerate_k_subsets(g, k, i + 1, chosen, visit);
        chosen.pop_back();
    }
}

}  // namespace

void for_each_independent_set(const Graph& g,
                              const std::function<void(const std::vector<VertexId>&)>& visit) {
    const std::size_t n = g.vertex_count();
    if (n > independent_set_enumeration_limit) {
        throw Error("independent set enumeration is limited to " +
                    std::to_string(independent_set_enumeration_limit) + " vertices, got " +
                    std::to_string(n));
    }
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k <= n; ++k) {
        enumerate_k_subsets(g, k, 0, chosen, visit);
    }
}

std::vector<std::vector<VertexId>> independent_sets(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    for_each_independent_set(g, [&out](const std::vector<VertexId>& s) { out.push_back(s); });
    return out;
}

bool is_independent_set(const Graph& g, const std::vector<VertexId>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
        }
    }
    return true;
}

Graph random_graph(std::size_t vertex_count, double edge_probability, std::mt19937_64& rng) {
    std::vector<VertexId> vertices;
    for (std::size_t i = 1; i <= vertex_count; ++i) vertices.push_back(canonical_name(i));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= vertex_count; ++i) {
        for (std::size_t j = i + 1; j <= vertex_count; ++j) {
            if (unit_draw(rng) < edge_probability) {
                edges.emplace_back(canonical_name(i), canonical_name(j));
            }
        }
    }
    return Graph::from_parts(std::move(vertices), edges);
}

Graph random_bipartite(std::size_t part1_size, std::size_t part2_size, double edge_probability,
                       std::mt19937_64& rng) {
    std::vector<VertexId> vertices;
    for (std::size_t i = 1; i <= part1_size + part2_size; ++i) {
        vertices.push_back(canonical_name(i));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= part1_size; ++i) {
        for (std::size_t j = part1_size + 1; j <= part1_size + part2_size; ++j) {
            if (unit_draw(rng) < edge_probability) {
                edges.emplace_back(canonical_name(i), canonical_name(j));
            }
        }
    }
    return Graph::from_parts(std::move(vertices), edges);
}

}  // namespace iasi
