#pragma once

#include <stdexcept>
#include <string>

namespace scs {

// All recoverable failures surface as this exception; the CLI maps it to a
// diagnostic line and a nonzero exit code.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scs
