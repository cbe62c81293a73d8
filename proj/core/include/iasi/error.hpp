#pragma once

#include <stdexcept>
#include <string>

namespace iasi {

/// Thrown on contract violations: malformed input, unknown vertices or
/// edges, and exceeded size guards. The message names the offender.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iasi
