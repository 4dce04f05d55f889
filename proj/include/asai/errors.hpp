#pragma once

#include <stdexcept>
#include <string>

namespace asai {

// Bad input data: malformed instances, schema violations, values outside
// the declared domain (CLI exit code 2).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that this release cannot decide, e.g. a
// supercuspidal component without its epsilon data (CLI exit code 3).
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computation paths disagreed.  Never caught internally:
// a fault here means a convention bug, not a user error.
struct InternalFault : std::logic_error {
    explicit InternalFault(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace asai
