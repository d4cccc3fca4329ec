#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected input (bad expression, bad table, out-of-range value). CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A computed result contradicts an invariant that valid inputs cannot break. CLI exit code 3.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed expression text; `position` is the byte offset of the offending token.
class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : InputError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Structurally valid input carrying a value outside the supported domain.
class ValueError : public InputError {
public:
    using InputError::InputError;
};

/// Defect found while validating a raw multiplication table.
enum class TableDefect {
    NotClosed,        ///< entry outside [0, n)
    NoIdentityAtZero, ///< element 0 does not act as the identity
    NotLatinSquare,   ///< a row or column repeats an element
    NotAssociative,   ///< (i*j)*k != i*(j*k) for some triple
};

class TableError : public InputError {
public:
    TableError(TableDefect defect, const std::string& what)
        : InputError(what), defect_(defect) {}

    TableDefect defect() const noexcept { return defect_; }

private:
    TableDefect defect_;
};

/// Brute-force operation invoked on a group above the configured order cap.
class OrderCapExceeded : public InputError {
public:
    OrderCapExceeded(int order, int cap)
        : InputError("group order " + std::to_string(order) +
                     " exceeds the brute-force order cap " + std::to_string(cap)),
          order_(order), cap_(cap) {}

    int order() const noexcept { return order_; }
    int cap() const noexcept { return cap_; }

private:
    int order_;
    int cap_;
};

/// An asserted depth was supplied without attesting that all retracts are Hopfian.
class HopfianAssumptionMissing : public InputError {
public:
    using InputError::InputError;
};

/// A homology dimension key lies outside {2..n} for an n-dimensional descriptor.
class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

/// Domination-DAG construction found a d-equal but non-isomorphic pair of classes.
/// The supported group classes are all Hopfian, so valid inputs cannot reach this.
class CycleDetected : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace domlab
