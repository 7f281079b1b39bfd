#pragma once

#include <stdexcept>
#include <string>

namespace leviflat {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structural misuse: mismatched variable sets, singular maps, bad dimensions.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An input outside an operation's domain (zero polynomial, zero divisor, ...).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// A stated mathematical hypothesis does not hold for the given input.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// A numeric routine could not reach its target accuracy or diverged.
class NumericFailure : public Error {
public:
    using Error::Error;
};

/// Thrown when a holomorphic polynomial has no Hermitian part proportional
/// to itself, i.e. it does not define a real hypersurface.
class NoRealForm : public Error {
public:
    using Error::Error;
};

} // namespace leviflat
