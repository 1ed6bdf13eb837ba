#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

// Base class for all arithmetic and consistency errors raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an operation would combine q with u or v in one polynomial.
// q abbreviates the product uv; the two coordinate systems are kept apart
// and bridged only by explicit substitution.
class MixedAliasError : public Error {
public:
    explicit MixedAliasError(const std::string& msg) : Error(msg) {}
};

// Raised by the even-power collapse substitution (t^2 -> q) when some term
// carries an odd exponent.
class OddExponentError : public Error {
public:
    explicit OddExponentError(const std::string& msg) : Error(msg) {}
};

// Raised by series reciprocal when the constant term vanishes.
class NonUnitConstantTermError : public Error {
public:
    explicit NonUnitConstantTermError(const std::string& msg) : Error(msg) {}
};

// Raised by cone truncation when a primitive dimension would be negative,
// i.e. the input Betti numbers are not unimodal below the middle degree.
class NegativePrimitiveError : public Error {
public:
    explicit NegativePrimitiveError(const std::string& msg) : Error(msg) {}
};

// Raised when two routes to the same quantity disagree.
class IdentityMismatchError : public Error {
public:
    explicit IdentityMismatchError(const std::string& msg) : Error(msg) {}
};

// Raised when a result that must have integer coefficients does not.
class NonIntegerCoefficientError : public Error {
public:
    explicit NonIntegerCoefficientError(const std::string& msg) : Error(msg) {}
};

// Raised when a result that must have non-negative coefficients does not.
class NegativeCoefficientError : public Error {
public:
    explicit NegativeCoefficientError(const std::string& msg) : Error(msg) {}
};

// Raised when a polynomial fails a required palindromy property.
class PalindromyError : public Error {
public:
    explicit PalindromyError(const std::string& msg) : Error(msg) {}
};

// Raised when a cross-check between two independent closed forms fails.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

// Raised when a multiplicity that must be non-negative comes out negative.
class NegativeMultiplicityError : public Error {
public:
    explicit NegativeMultiplicityError(const std::string& msg) : Error(msg) {}
};

// Raised when a low-order expansion does not match its predicted truncation.
class ExpansionMismatchError : public Error {
public:
    explicit ExpansionMismatchError(const std::string& msg) : Error(msg) {}
};

// Raised when an operation is asked for a group it does not cover.
class UnsupportedGroupError : public Error {
public:
    explicit UnsupportedGroupError(const std::string& msg) : Error(msg) {}
};

// Raised when an operation is asked for an invariant kind it does not cover.
class UnsupportedKindError : public Error {
public:
    explicit UnsupportedKindError(const std::string& msg) : Error(msg) {}
};

} // namespace charvar
