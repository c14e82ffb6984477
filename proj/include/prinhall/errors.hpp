#pragma once

#include <stdexcept>
#include <string>

namespace prinhall {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: poset axioms, matrix shapes, closure, path independence.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the configured element budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A Hall algebra product leaves the materialized dimension bound.
class OutOfBound : public BudgetExceeded {
public:
    using BudgetExceeded::BudgetExceeded;
};

/// An exact-arithmetic check failed where the theory predicts success:
/// inexact polynomial division, verification-prime mismatch, non-monic
/// automorphism polynomial. Never absorbed.
class Falsification : public Error {
public:
    using Error::Error;
};

} // namespace prinhall
