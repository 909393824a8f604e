#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

enum class ErrorKind {
    Parse,             // malformed input text/JSON
    Validation,        // well-formed input violating an invariant
    GeometryMismatch,  // cake value where a pie one is needed, or vice versa
    InvalidArgument,   // out-of-range parameter (k, n, grid, ...)
    Infeasible,        // a feasibility problem with no solution
    Precondition,      // operation called outside its stated precondition
    Limit,             // a solver gave up (search cutoff, size cap)
    Internal,          // construction self-check failed; a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace fairdiv
