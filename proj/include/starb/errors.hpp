#pragma once

#include <stdexcept>
#include <string>

namespace starb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Series division requires |b0| above the unit threshold.
class DivisionByNonUnit : public Error {
public:
    using Error::Error;
};

/// log() requires the constant term to stay off the branch cut (Re > 0).
class BranchViolation : public Error {
public:
    using Error::Error;
};

/// compose() requires an inner series with zero constant term.
class NonvanishingInner : public Error {
public:
    using Error::Error;
};

/// revert() requires |f1| above the unit threshold.
class NonUnitDerivative : public Error {
public:
    using Error::Error;
};

/// Disk parameters must lie in the closed unit disk.
class ParamOutOfDisk : public Error {
public:
    using Error::Error;
};

/// Schwarz-prefix inequality violated beyond tolerance.
class SchwarzViolation : public Error {
public:
    using Error::Error;
};

/// Domain membership is undefined at the origin.
class OriginExcluded : public Error {
public:
    using Error::Error;
};

/// Coefficient stream too short for the requested determinant.
class InsufficientCoefficients : public Error {
public:
    using Error::Error;
};

/// Scalar input outside the admissible open interval.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace starb
