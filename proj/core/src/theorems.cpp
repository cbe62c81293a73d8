#include "iasi/theorems.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "iasi/construct.hpp"
#include "iasi/intset.hpp"
#include "iasi/labeling.hpp"
#include "iasi/sparing.hpp"

namespace iasi {

namespace {

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

IntSet random_intset(std::mt19937_64& rng, std::uint64_t universe, std::size_t max_size) {
    const std::size_t size = 1 + rng() % max_size;
    std::vector<std::uint64_t> elements;
    for (std::size_t i = 0; i < size; ++i) {
        elements.push_back(rng() % universe);
    }
    return IntSet(std::move(elements));  // duplicates collapse; result may be smaller
}

// All non-empty subsets of {0..universe-1} with at most max_size elements.
std::vector<IntSet> small_subsets(std::uint64_t universe, std::size_t max_size) {
    std::vector<IntSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << universe); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > max_size) continue;
        std::vector<std::uint64_t> elements;
        for (std::uint64_t bit = 0; bit < universe; ++bit) {
            if (mask & (std::uint64_t{1} << bit)) elements.push_back(bit);
        }
        out.emplace_back(std::move(elements));
    }
    return out;
}

}  // namespace

std::vector<CompleteFamilyRow> check_complete_family(std::size_t max_n) {
    std::vector<CompleteFamilyRow> rows;
    for (std::size_t n = 3; n <= max_n; ++n) {
        CompleteFamilyRow row;
        row.n = n;
        row.closed_form = sparing_closed_form(Graph::complete(n))->value;
        row.exhaustive = sparing_exhaustive(Graph::complete(n)).value;
        row.match = row.closed_form == row.exhaustive &&
                    row.exhaustive == (n - 1) * (n - 2) / 2;
        rows.push_back(row);
    }
    return rows;
}

std::vector<CycleFamilyRow> check_cycle_family(std::size_t max_n) {
    std::vector<CycleFamilyRow> rows;
    for (std::size_t n = 3; n <= max_n; ++n) {
        CycleFamilyRow row;
        row.n = n;
        row.expected = n % 2;
        row.closed_form = sparing_closed_form(Graph::cycle(n))->value;
        row.exhaustive = sparing_exhaustive(Graph::cycle(n)).value;
        row.match = row.closed_form == row.expected && row.exhaustive == row.expected;
        rows.push_back(row);
    }
    return rows;
}

std::vector<BipartiteFamilyRow> check_bipartite_family(std::size_t count,
                                                       std::size_t max_vertices,
                                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<BipartiteFamilyRow> rows;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t total = 2 + rng() % (std::max<std::size_t>(max_vertices, 2) - 1);
        const std::size_t part1 = 1 + rng() % (total - 1);
        const double p = 0.15 + 0.7 * unit_draw(rng);
        const Graph g = random_bipartite(part1, total - part1, p, rng);

        BipartiteFamilyRow row;
        row.vertices = g.vertex_count();
        row.edges = g.edge_count();
        row.sparing_value = sparing_exhaustive(g).value;

        const SetLabeling f = weak_bipartite(g);
        const LabelingReport report = classify(g, f);
        row.constructed_mono_edges = report.mono_indexed_edge_count();
        row.constructed_weak = report.is_weak;
        row.match = row.sparing_value == 0 && row.constructed_mono_edges == 0 &&
                    row.constructed_weak;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ParityFamilyRow> check_parity_family(std::size_t max_n) {
    std::vector<ParityFamilyRow> rows;
    for (std::size_t n = 3; n <= max_n; ++n) {
        rows.push_back({n, mono_indexed_count_parity_check(n)});
    }
    return rows;
}

LemmaBoundsReport check_lemma_bounds(std::size_t random_pairs, std::uint64_t seed) {
    LemmaBoundsReport report;
    std::mt19937_64 rng(seed);

    report.random_pairs = random_pairs;
    for (std::size_t i = 0; i < random_pairs; ++i) {
        const IntSet a = random_intset(rng, 64, 8);
        const IntSet b = random_intset(rng, 64, 8);
        const auto [lower, upper] = cardinality_bounds(a, b);
        const std::size_t actual = sumset(a, b).cardinality();
        if (actual < lower || actual > upper) ++report.random_bound_violations;
    }

    const std::vector<IntSet> pool = small_subsets(10, 4);
    for (const IntSet& a : pool) {
        for (const IntSet& b : pool) {
            ++report.exhaustive_pairs;
            const std::size_t actual = sumset(a, b).cardinality();
            if (actual + 1 < a.cardinality() + b.cardinality()) ++report.growth_violations;
            const bool at_lower = actual == std::max(a.cardinality(), b.cardinality());
            const bool has_singleton = std::min(a.cardinality(), b.cardinality()) == 1;
            if (at_lower != has_singleton) ++report.corollary_violations;
        }
    }
    return report;
}

}  // namespace iasi
