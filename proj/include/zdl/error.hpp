#pragma once

#include <stdexcept>
#include <string>

namespace zdl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (ring spec, JSON file, CLI range).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Arguments violate an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exact routine or enumeration was asked to run above its configured cap.
/// Exact routines never fall back to an approximation.
class CapExceeded : public Error {
public:
    CapExceeded(std::string what_routine, long long requested, long long cap)
        : Error(what_routine + ": exact routine refused, size " + std::to_string(requested) +
                " exceeds cap " + std::to_string(cap)),
          routine_(std::move(what_routine)), requested_(requested), cap_(cap) {}

    const std::string& routine() const noexcept { return routine_; }
    long long requested() const noexcept { return requested_; }
    long long cap() const noexcept { return cap_; }

private:
    std::string routine_;
    long long requested_;
    long long cap_;
};

/// A theorem's hypothesis is not met by the given input (e.g. lift on a complete graph).
class NotApplicable : public Error {
public:
    using Error::Error;
};

}  // namespace zdl
