#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seifert5 {

/// Malformed input: wrong shapes, unknown names, schema violations.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input data breaks one or more model invariants. Carries every violation found.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// An operation was called outside the hypotheses it is valid under.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not (e.g. d_w != d_p). Signals bad input
/// data or a bug; never silently tolerated.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace seifert5
