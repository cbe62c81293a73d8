#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace iasi {

/// A finite non-empty subset of the non-negative integers, stored as a
/// strictly increasing element sequence. Elements stay below 2^63 so any
/// pairwise sum still fits in 64 bits; cardinality is capped at 2^16.
/// The empty set is unrepresentable; see symmetric_difference for the one
/// operation whose result may be empty.
class IntSet {
public:
    static constexpr std::uint64_t max_element = (std::uint64_t{1} << 63) - 1;
    static constexpr std::size_t max_cardinality = std::size_t{1} << 16;

    /// Normalizes (sorts, deduplicates) and validates the bounds above.
    explicit IntSet(std::vector<std::uint64_t> elements);
    IntSet(std::initializer_list<std::uint64_t> elements);

    static IntSet singleton(std::uint64_t value);

    /// Parses the canonical text form "{a1,a2,...}": strictly increasing
    /// decimal integers, no whitespace.
    static IntSet parse(std::string_view text);

    const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
    std::size_t cardinality() const noexcept { return elements_.size(); }
    bool is_singleton() const noexcept { return elements_.size() == 1; }
    std::uint64_t min() const noexcept { return elements_.front(); }
    std::uint64_t max() const noexcept { return elements_.back(); }
    bool contains(std::uint64_t value) const;

    /// Canonical text form "{a1,a2,...}".
    std::string to_string() const;

    friend bool operator==(const IntSet&, const IntSet&) = default;
    friend std::strong_ordering operator<=>(const IntSet&, const IntSet&) = default;

private:
    std::vector<std::uint64_t> elements_;
};

/// {a+b : a in A, b in B}, deduplicated and sorted.
IntSet sumset(const IntSet& a, const IntSet& b);

/// (A ∪ B) \ (A ∩ B). May be empty, so the result is a plain sorted vector
/// rather than an IntSet.
std::vector<std::uint64_t> symmetric_difference(const IntSet& a, const IntSet& b);

struct CardinalityBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

/// (max(|A|,|B|), |A|*|B|); |A+B| always lies within these bounds inclusive.
CardinalityBounds cardinality_bounds(const IntSet& a, const IntSet& b);

}  // namespace iasi
