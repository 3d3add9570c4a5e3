#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

// Domain error for invalid specs, coordinates out of range, broken
// preconditions. The CLI maps it to exit status 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpc
