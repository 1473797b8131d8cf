#pragma once

#include <stdexcept>
#include <string>

namespace crownbetti {

// Raised when an operation is called outside its domain: mismatched variable
// sets, family parameters violating their bounds, malformed input documents.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace crownbetti
