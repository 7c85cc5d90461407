#pragma once
#include <stdexcept>
#include <string>

namespace plab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad input text / file contents
struct ParseError : Error {
    using Error::Error;
};

// argument outside the documented domain (alpha <= 1, n == 0, ...)
struct DomainError : Error {
    using Error::Error;
};

// a label byte string that cannot be decoded under the claimed scheme
struct MalformedLabel : Error {
    using Error::Error;
};

// degree-sequence embedding target cannot be satisfied
struct Infeasible : Error {
    using Error::Error;
};

} // namespace plab
