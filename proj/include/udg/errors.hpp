#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace udg {

/// Input violates an operation's precondition. `witnesses` lists the vertices
/// (or indices) that show the violation, when there are any.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what, std::vector<int> witnesses_ = {})
        : std::invalid_argument(what), witnesses(std::move(witnesses_)) {}
    std::vector<int> witnesses;
};

/// A randomized construction ran out of retries. This signals numerically
/// degenerate sampling, never non-realizability.
class ConstructionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace udg
