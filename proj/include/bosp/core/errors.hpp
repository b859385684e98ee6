#pragma once

#include <stdexcept>
#include <string>

namespace bosp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (shape/dimension mismatch etc.).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Matrix Market parsing failed; the message names the offending line.
class IngestionError : public Error {
public:
    using Error::Error;
};

/// A projected block that must be SPD failed its Cholesky factorization.
/// Signals that the search subspace is contaminated by the generalized
/// nullspace or by locked eigenvectors.
class NullspaceLeak : public Error {
public:
    using Error::Error;
};

/// The projected problem produced a singular value at round-off scale;
/// a near-zero eigenvalue should have been deflated beforehand.
class DegenerateSpectrum : public Error {
public:
    using Error::Error;
};

/// Detected nullspace dimension disagrees with the caller-provided hint.
class RankMismatch : public Error {
public:
    using Error::Error;
};

/// The nullspace Gram matrix is not SPD; the computed basis is unusable.
class InvalidNullspace : public Error {
public:
    using Error::Error;
};

/// Random seeding plus biorthogonalization lost too many columns.
class InitializationFailure : public Error {
public:
    using Error::Error;
};

/// Residual history too short to fit regression coefficients.
class NotEnoughSamples : public Error {
public:
    using Error::Error;
};

/// Unrecoverable numerical failure inside the outer iteration.
class NumericalAbort : public Error {
public:
    using Error::Error;
};

} // namespace bosp
