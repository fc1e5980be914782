#ifndef TIGHTFRAME_ERRORS_HPP
#define TIGHTFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tightframe {

// malformed or contradictory input (CLI exit code 2)
struct InputError : std::runtime_error {
    explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// size guard or exhausted budget (CLI exit code 3)
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& m) : std::runtime_error(m) {}
};

// a stated precondition does not hold for the given instance
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace tightframe

#endif
