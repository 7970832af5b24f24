#pragma once

#include <stdexcept>
#include <string>

namespace crossint {

// Root of every error the library raises. The CLI maps the subclasses onto
// its exit codes, so keep the hierarchy shallow.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violated by the caller.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The request is well formed but exceeds a search budget or a word-size limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A bracketing root search had no sign change to work with.
class NoRootError : public Error {
public:
    using Error::Error;
};

class InvalidTruncation : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NonBinomialSize : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// A strict inequality could not be decided because the two sides are within
// the comparison tolerance of each other.
class UndecidableAtTolerance : public Error {
public:
    using Error::Error;
};

// A finite scan ended without finding what it was looking for.
class NotFound : public Error {
public:
    using Error::Error;
};

} // namespace crossint
