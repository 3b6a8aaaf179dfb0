#pragma once

#include <stdexcept>
#include <string>

namespace qhflow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exponent overflow past the configured cap.
class InputTooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidType : public Error {
public:
    using Error::Error;
};

// H1/H2 failure, or an unsolvable homological equation.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

// An invariant the library maintains itself has been violated.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qhflow
