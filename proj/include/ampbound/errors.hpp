#pragma once

#include <stdexcept>
#include <string>

namespace ampbound {

// Invalid model parameters (sigma <= 0, rate <= 0, a >= b, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A precondition on an operation's arguments was violated.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A statistical estimator could not produce a value (zero kNN
// distances after tie jitter, too many failed iterations, ...).
struct EstimationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fit did not converge or the design is singular.
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; message names the offending line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation received an empty sample or file.
struct EmptyInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Divergent integral (e.g. Renyi order q=0 on unbounded support).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ampbound
