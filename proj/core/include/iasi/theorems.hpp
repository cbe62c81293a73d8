#pragma once

#include <cstdint>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

// Runnable spot checks for the structural facts the solvers rely on. Every
// row computes its columns independently at run time (closed form vs
// search, construction vs classification) so the tables double as oracles.

struct CompleteFamilyRow {
    std::size_t n = 0;
    std::size_t closed_form = 0;
    std::size_t exhaustive = 0;
    bool match = false;
};

struct CycleFamilyRow {
    std::size_t n = 0;
    std::size_t expected = 0;  // n mod 2
    std::size_t closed_form = 0;
    std::size_t exhaustive = 0;
    bool match = false;
};

struct BipartiteFamilyRow {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t sparing_value = 0;
    std::size_t constructed_mono_edges = 0;
    bool constructed_weak = false;
    bool match = false;
};

struct ParityFamilyRow {
    std::size_t n = 0;
    bool verified = false;
};

struct LemmaBoundsReport {
    std::size_t random_pairs = 0;
    std::size_t random_bound_violations = 0;
    std::size_t exhaustive_pairs = 0;
    std::size_t growth_violations = 0;     // |A+B| >= |A|+|B|-1
    std::size_t corollary_violations = 0;  // |A+B| = max(|A|,|B|) iff min(|A|,|B|) = 1

    bool match() const {
        return random_bound_violations == 0 && growth_violations == 0 &&
               corollary_violations == 0;
    }
};

/// Sparing of K_n: closed form (n-1)(n-2)/2 against exhaustive search, n = 3..max_n.
std::vector<CompleteFamilyRow> check_complete_family(std::size_t max_n);

/// Sparing of C_n: n mod 2 against closed form and exhaustive search, n = 3..max_n.
std::vector<CycleFamilyRow> check_cycle_family(std::size_t max_n);

/// Random bipartite graphs: sparing 0 and a zero-mono weak construction.
std::vector<BipartiteFamilyRow> check_bipartite_family(std::size_t count,
                                                       std::size_t max_vertices,
                                                       std::uint64_t seed);

/// Mono-indexed edge count parity over every independent set of C_n, n = 3..max_n.
std::vector<ParityFamilyRow> check_parity_family(std::size_t max_n);

/// Random sumset cardinality bounds (pairs drawn from subsets of {0..63} of
/// size <= 8) plus the exhaustive growth and singleton-equality facts over
/// all subsets of {0..9} of size <= 4.
LemmaBoundsReport check_lemma_bounds(std::size_t random_pairs, std::uint64_t seed);

}  // namespace iasi
