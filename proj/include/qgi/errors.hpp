#pragma once

#include <stdexcept>
#include <string>

namespace qgi {

// Bad user input: unparsable spec, malformed table, invalid parameters.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A requested group exceeds the configured order cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a bug, not bad input.
struct DefectError : std::logic_error {
    explicit DefectError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace qgi
