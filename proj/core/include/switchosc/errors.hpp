#pragma once

#include <stdexcept>
#include <string>

namespace switchosc {

/// Parameters or inputs outside the region where the model is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument outside the interval an operation is defined on.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// An adaptive numerical routine could not reach the requested accuracy.
class ToleranceNotMet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root bracket whose endpoints do not straddle a sign change.
class NoSignChange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Wigner grid whose integral is too far from one to take moments of.
class NotNormalized : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace switchosc
