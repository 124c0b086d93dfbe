#pragma once

#include <stdexcept>
#include <string>

namespace achsat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad numeric parameters (k > n, probabilities outside [0,1], ...).
class InvalidParameters : public Error {
public:
    using Error::Error;
};

// Instance too large for an exhaustive routine.
class SizeError : public Error {
public:
    using Error::Error;
};

// Operation requires a specific clause width (or candidate count).
class WidthError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace achsat
