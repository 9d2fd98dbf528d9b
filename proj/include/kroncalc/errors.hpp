#pragma once

#include <stdexcept>
#include <string>

namespace kroncalc {

/// Malformed or inconsistent input (bad partition text, size mismatch).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a feasibility guard; rerun with a larger limit to force it.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. a character sum that is not
/// an integer). Never recoverable.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidInput(what);
}

}  // namespace kroncalc
