#ifndef FRACSPLINE_ERROR_HPP
#define FRACSPLINE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fracspline {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in Clifford algebras of different dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma evaluated at a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Principal logarithm undefined (base on the negative real axis).
class BranchError : public Error {
public:
    using Error::Error;
};

/// Spline order violates its family constraint (re z > 1, Sc > 1, n >= 1).
class OrderError : public Error {
public:
    using Error::Error;
};

/// Invalid family parameter (exponential weights, a > 0, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Result not representable to working precision.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Sampling grid too coarse or otherwise unusable.
class GridError : public Error {
public:
    using Error::Error;
};

/// Exponential reweighting overflows on the sampling grid.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Malformed input data (CSV, JSON config).
class FormatError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace fracspline

#endif
