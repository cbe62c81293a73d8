#include "iasi/intset.hpp"

#include <algorithm>
#include <charconv>

#include "iasi/error.hpp"

namespace iasi {

namespace {

void validate_element(std::uint64_t value) {
    if (value > IntSet::max_element) {
        throw Error("IntSet element " + std::to_string(value) + " exceeds the 2^63-1 bound");
    }
}

}  // namespace

IntSet::IntSet(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error("IntSet must be non-empty");
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    validate_element(elements_.back());
    if (elements_.size() > max_cardinality) {
        throw Error("IntSet cardinality " + std::to_string(elements_.size()) +
                    " exceeds the 2^16 bound");
    }
}

IntSet::IntSet(std::initializer_list<std::uint64_t> elements)
    : IntSet(std::vector<std::uint64_t>(elements)) {}

IntSet IntSet::singleton(std::uint64_t value) { return IntSet{value}; }

bool IntSet::contains(std::uint64_t value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::string IntSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(elements_[i]);
    }
    out += '}';
    return out;
}

IntSet IntSet::parse(std::string_view text) {
    if (text.size() < 3 || text.front() != '{' || text.back() != '}') {
        throw Error("IntSet text must look like \"{a1,a2,...}\", got \"" + std::string(text) + "\"");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<std::uint64_t> elements;
    const char* cur = body.data();
    const char* end = body.data() + body.size();
    while (cur != end) {
        std::uint64_t value = 0;
        auto [next, ec] = std::from_chars(cur, end, value);
        if (ec != std::errc{} || next == cur) {
            throw Error("malformed integer in IntSet text \"" + std::string(text) + "\"");
        }
        if (!elements.empty() && value <= elements.back()) {
            throw Error("IntSet text must be strictly increasing: \"" + std::string(text) + "\"");
        }
        validate_element(value);
        elements.push_back(value);
        cur = next;
        if (cur != end) {
            if (*cur != ',') {
                throw Error("expected ',' in IntSet text \"" + std::string(text) + "\"");
            }
            ++cur;
            if (cur == end) {
                throw Error("trailing ',' in IntSet text \"" + std::string(text) + "\"");
            }
        }
    }
    if (elements.empty()) {
        throw Error("IntSet text denotes the empty set: \"" + std::string(text) + "\"");
    }
    return IntSet(std::move(elements));
}

IntSet sumset(const IntSet& a, const IntSet& b) {
    // Merge |small| shifted copies of the larger set; keeps memory at the
    // size of the result instead of |A|*|B|.
    const IntSet& small = a.cardinality() <= b.cardinality() ? a : b;
    const IntSet& large = a.cardinality() <= b.cardinality() ? b : a;
    std::vector<std::uint64_t> acc;
    std::vector<std::uint64_t> merged;
    for (std::uint64_t shift : small.elements()) {
        merged.clear();
        merged.reserve(acc.size() + large.cardinality());
        auto it = acc.begin();
        for (std::uint64_t x : large.elements()) {
            const std::uint64_t sum = x + shift;  // both < 2^63, no overflow
            while (it != acc.end() && *it < sum) merged.push_back(*it++);
            if (it != acc.end() && *it == sum) ++it;
            merged.push_back(sum);
        }
        merged.insert(merged.end(), it, acc.end());
        acc.swap(merged);
        if (acc.size() > IntSet::max_cardinality) {
            throw Error("sumset cardinality exceeds the 2^16 IntSet bound");
        }
    }
    return IntSet(std::move(acc));
}

std::vector<std::uint64_t> symmetric_difference(const IntSet& a, const IntSet& b) {
    std::vector<std::uint64_t> out;
    std::set_symmetric_difference(a.elements().begin(), a.elements().end(),
                                  b.elements().begin(), b.elements().end(),
                                  std::back_inserter(out));
    return out;
}

CardinalityBounds cardinality_bounds(const IntSet& a, const IntSet& b) {
    return {std::max(a.cardinality(), b.cardinality()), a.cardinality() * b.cardinality()};
}

}  // namespace iasi
