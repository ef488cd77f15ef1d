#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two objects that must live on the same torus have different dimensions.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A map that must square to the identity does not.
class NonInvolutive : public Error {
public:
    using Error::Error;
};

// Two group generators fail to commute.
class NonCommuting : public Error {
public:
    using Error::Error;
};

// The generated group has fewer elements than indices, i.e. some product
// of generators collapses to a previously seen map.
class NotEffective : public Error {
public:
    using Error::Error;
};

// Fixed components of two different involutions meet, so the singular set
// has no product neighborhood model.
class OverlappingLoci : public Error {
public:
    using Error::Error;
};

// The stratum monomial claims of the singular orbits cannot be reconciled
// with the invariant cohomology basis.
class InconsistentClaims : public Error {
public:
    using Error::Error;
};

// Intersection number requested for subtori whose dimensions do not sum
// to the ambient dimension.
class NonComplementary : public Error {
public:
    using Error::Error;
};

// Ring product requested for generators whose dimension sum is below the
// ambient dimension; such products vanish identically and a request for
// one is a caller bug.
class DimensionTooLow : public Error {
public:
    using Error::Error;
};

// Configuration text could not be parsed; carries a 1-based line number.
class ConfigError : public Error {
public:
    ConfigError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace kummer
