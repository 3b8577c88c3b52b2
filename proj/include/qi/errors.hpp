#ifndef QI_ERRORS_HPP
#define QI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qi {

// Error taxonomy shared by the library, the C API and the CLI.
// The categories map one-to-one onto the CLI exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (bad JSON, bad rational literal, ...). Exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid data for which the requested quantity has no
// defined value (e.g. a diagram series for b1 = 0). Exit code 3.
struct UnsupportedError : Error {
    using Error::Error;
};

// Input data violating a structural invariant (asymmetric Alexander
// coefficients, pairing table keys that are not partitions, ...). Exit code 4.
struct InvariantError : Error {
    using Error::Error;
};

// Operation precondition violated (mixed series variables, odd-sized
// antisymmetric matrix, ...). Treated like an invariant violation at the
// tool boundary. Exit code 4.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace qi

#endif
