#pragma once

// Brute-force reference implementations used as independent oracles by the
// unit and acceptance suites. Everything here enumerates directly from the
// definitions and stays independent of the library's algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/intset.hpp"

namespace oracle {

inline std::vector<std::uint64_t> sumset(const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) {
    std::set<std::uint64_t> sums;
    for (auto x : a) {
        for (auto y : b) sums.insert(x + y);
    }
    return {sums.begin(), sums.end()};
}

inline std::vector<std::uint64_t> symmetric_difference(const std::vector<std::uint64_t>& a,
                                                       const std::vector<std::uint64_t>& b) {
    std::set<std::uint64_t> sa(a.begin(), a.end());
    std::set<std::uint64_t> sb(b.begin(), b.end());
    std::vector<std::uint64_t> out;
    for (auto x : sa) {
        if (!sb.contains(x)) out.push_back(x);
    }
    for (auto x : sb) {
        if (!sa.contains(x)) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All non-empty subsets of {0..universe-1} with at most max_size elements.
inline std::vector<std::vector<std::uint64_t>> small_subsets(unsigned universe,
                                                             unsigned max_size) {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << universe); ++mask) {
        if (std::popcount(mask) > static_cast<int>(max_size)) continue;
        std::vector<std::uint64_t> elements;
        for (unsigned bit = 0; bit < universe; ++bit) {
            if (mask & (std::uint32_t{1} << bit)) elements.push_back(bit);
        }
        out.push_back(std::move(elements));
    }
    return out;
}

inline bool subset_independent(const iasi::Graph& g, std::uint32_t mask) {
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (std::uint32_t{1} << i))) continue;
        for (std::size_t j : g.adjacent_indices(i)) {
            if (j > i && (mask & (std::uint32_t{1} << j))) return false;
        }
    }
    return true;
}

/// Counts independent sets by filtering every vertex subset.
inline std::uint64_t count_independent_sets(const iasi::Graph& g) {
    const std::size_t n = g.vertex_count();
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (subset_independent(g, mask)) ++count;
    }
    return count;
}

/// Minimum number of edges avoiding an independent set, over all vertex
/// subsets (non-independent ones are filtered out).
inline std::size_t sparing_number(const iasi::Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    std::size_t best = g.edge_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (!subset_independent(g, mask)) continue;
        std::size_t outside = 0;
        for (const auto& [u, v] : edges) {
            const std::uint32_t ends = (std::uint32_t{1} << g.index_of(u)) |
                                       (std::uint32_t{1} << g.index_of(v));
            if (!(mask & ends)) ++outside;
        }
        best = std::min(best, outside);
    }
    return best;
}

/// Tries every 2-coloring.
inline bool is_bipartite(const iasi::Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::uint32_t coloring = 0; coloring < (std::uint32_t{1} << n); ++coloring) {
        bool proper = true;
        for (std::size_t i = 0; i < n && proper; ++i) {
            for (std::size_t j : g.adjacent_indices(i)) {
                if (((coloring >> i) & 1) == ((coloring >> j) & 1)) {
                    proper = false;
                    break;
                }
            }
        }
        if (proper) return true;
    }
    return n == 0;
}

/// Every graph on vertices v1..vn, as edge subsets of K_n.
inline std::vector<iasi::Graph> all_graphs(std::size_t n) {
    std::vector<iasi::Edge> slots;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            slots.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
        }
    }
    std::vector<iasi::VertexId> vertices;
    for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));

    std::vector<iasi::Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
        std::vector<iasi::Edge> edges;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (mask & (std::uint32_t{1} << s)) edges.push_back(slots[s]);
        }
        out.push_back(iasi::Graph::from_parts(vertices, edges));
    }
    return out;
}

inline const iasi::Graph& petersen() {
    static const iasi::Graph g = iasi::Graph::from_edge_list(
        "v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v1\n"
        "v1 v6\nv2 v7\nv3 v8\nv4 v9\nv5 v10\n"
        "v6 v8\nv8 v10\nv10 v7\nv7 v9\nv9 v6\n");
    return g;
}

}  // namespace oracle
