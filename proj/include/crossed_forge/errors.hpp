#ifndef CROSSED_FORGE_ERRORS_HPP
#define CROSSED_FORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crossed_forge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to different rings / groups / systems.
class DomainMismatchError : public Error {
public:
    explicit DomainMismatchError(const std::string& what) : Error(what) {}
};

/// The operation is not defined for this kind of object
/// (e.g. enumeration of an infinite ring).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

/// An exhaustive search would exceed the configured size guards.
class EnumerationLimitError : public Error {
public:
    explicit EnumerationLimitError(const std::string& what) : Error(what) {}
};

/// A stated precondition does not hold (bad parameters, a set that is
/// not an ideal, a failed theorem hypothesis, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (element literals, scenario files).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace crossed_forge

#endif
