#pragma once

#include <stdexcept>
#include <string>

namespace hlx {

// malformed input text (message carries the line number)
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// out-of-range ids, infeasible configs, bad parameter values
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// consecutive hyperedges of a walk share no vertex
struct InvalidWalkError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// bad magic/version/checksum or truncated index file
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// label index and its dual disagree
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hlx
