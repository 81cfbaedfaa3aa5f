#ifndef KPOISSON_ERRORS_HPP
#define KPOISSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kpoisson {

// Argument outside the mathematical domain of an operation (negative lambda,
// a closed form queried outside its validity range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller broke a documented precondition (k = 0, exp of a series with a
// nonzero constant term, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact identity that must hold did not (non-integral coefficient where
// integrality is guaranteed, oracle disagreement inside a builder).
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Numeric series summation hit its hard cap before the tail bound was met.
class TruncationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested parameters are outside what the implementation supports.
class NotSupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (rational literals, CLI values).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace kpoisson

#endif
