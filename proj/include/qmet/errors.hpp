#pragma once

#include <stdexcept>
#include <string>

namespace qmet {

/// Malformed text input: literals, matrix/vector/measure files, CLI payloads.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmet
