#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

enum class SparingMethod { closed_form, exhaustive, branch_and_bound };

std::string to_string(SparingMethod method);

/// The sparing number of a graph together with an optimal witness: the
/// independent set of non-singleton vertices and a weak labeling realizing
/// exactly `value` mono-indexed edges. Witnesses are re-verified by
/// classify before being returned.
struct SparingResult {
    std::size_t value = 0;
    std::vector<VertexId> witness_set;
    SetLabeling witness_labeling;
    SparingMethod method = SparingMethod::exhaustive;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t exhaustive_vertex_limit = 24;
inline constexpr std::size_t branch_and_bound_vertex_limit = 200;

/// Minimizes the number of edges avoiding an independent set, over every
/// independent set. Witness ties break to the first optimum in
/// size-then-lexicographic enumeration order.
SparingResult sparing_exhaustive(const Graph& g);

/// Same objective, branch and bound: vertices in max-degree-first order,
/// bound = edges already forced outside the set. Deterministic.
SparingResult sparing_branch_and_bound(const Graph& g);

/// Closed forms for recognized families: bipartite -> 0, cycle -> n mod 2,
/// complete -> (n-1)(n-2)/2. Absent when the graph is none of these.
std::optional<SparingResult> sparing_closed_form(const Graph& g);

/// Closed form when available, branch and bound otherwise.
SparingResult sparing(const Graph& g);

/// For the cycle on n vertices (3 <= n <= 16): enumerates every independent
/// set and checks that the count of edges avoiding it has the parity of n.
bool mono_indexed_count_parity_check(std::size_t n);

}  // namespace iasi
