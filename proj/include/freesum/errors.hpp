#ifndef FREESUM_ERRORS_HPP
#define FREESUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freesum {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain. The CLI maps the whole
// family to exit code 4.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DomainError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Raised by hull/volume routines for point sets that do not span their
// ambient space. Carries the affine dimension actually found.
class LowerDimensionalError : public PreconditionError {
public:
    LowerDimensionalError(int affine_dim, int ambient_dim)
        : PreconditionError("point set is lower-dimensional: affine dimension " +
                            std::to_string(affine_dim) + " in ambient dimension " +
                            std::to_string(ambient_dim)),
          affine_dim_(affine_dim) {}

    int affine_dim() const noexcept { return affine_dim_; }

private:
    int affine_dim_;
};

class UnboundedDualError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class BudgetExceededError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A computed result violated an invariant that theory guarantees; always a bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace freesum

#endif  // FREESUM_ERRORS_HPP
