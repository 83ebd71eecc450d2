#ifndef TANGENCY_ERRORS_HPP
#define TANGENCY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tangency {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live over different ambient spaces.
struct IncompatibleSpacesError : Error {
    using Error::Error;
};

// Scenario data violates a structural precondition (dim X < 1, k out of range, ...).
struct DegenerateScenarioError : Error {
    using Error::Error;
};

// A corollary-specific check was requested on a scenario outside its hypotheses.
struct CorollaryInapplicableError : Error {
    using Error::Error;
};

// The truncated colength computation did not stabilize within the degree budget:
// either the ideal's zero locus is not isolated at the origin, or max_degree is too small.
struct NotIsolatedError : Error {
    using Error::Error;
};

// The curve {f=0} is invariant by the vector field, so the tangency index is undefined.
struct InvariantCurveError : Error {
    using Error::Error;
};

// Two independent routes to the same quantity disagreed. Always a defect, never a report.
struct InternalCrossCheckError : Error {
    using Error::Error;
};

struct SourcePos {
    int line = 0;
    int col = 0;
};

// Scenario/expression syntax or validation failure, with position diagnostics.
struct ParseError : Error {
    SourcePos pos;
    ParseError(SourcePos p, const std::string& what_arg)
        : Error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + what_arg), pos(p) {}
};

} // namespace tangency

#endif
