#pragma once

#include <stdexcept>
#include <string>

namespace monores {

// Error taxonomy, mapped to CLI exit codes:
//   InputError     -> 1  (bad arguments, syntax errors, unknown variables)
//   DomainError    -> 2  (valid input outside an operation's precondition)
//   ResourceError  -> 3  (size cap exceeded; never silently truncated)
//   InvariantError -> 4  (a cross-check that must hold failed)

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : InputError {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what)
        : InputError("parse error at " + std::to_string(line_) + ":" +
                     std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Structural classification failed: the input is outside the matcher's
// hypotheses, or the matcher itself has a gap.
struct ClassificationError : DomainError {
    explicit ClassificationError(const std::string& what) : DomainError(what) {}
};

// No closed-form rule covers the ideal; callers fall back to the oracle.
struct FormulaNotApplicable : DomainError {
    explicit FormulaNotApplicable(const std::string& what) : DomainError(what) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monores
