#pragma once

#include <stdexcept>
#include <string>

namespace concept_homology {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A complex violates face closure, ordering, or filtration monotonicity.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied argument is outside the operation's domain.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (CSV cells, filtration lines, report JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace concept_homology
