#ifndef PVC_ERROR_HPP
#define PVC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pvc {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The two sides of a partition intersect.
class OverlapError : public Error {
  public:
    using Error::Error;
};

/// An item index lies outside the universe.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// Two values that must share a universe do not.
class UniverseMismatchError : public Error {
  public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetExceededError : public Error {
  public:
    using Error::Error;
};

/// An operation restricted to covering partitions met a non-covering one.
class NotCoveringError : public Error {
  public:
    using Error::Error;
};

/// The operation needs a nonempty family.
class EmptyFamilyError : public Error {
  public:
    using Error::Error;
};

/// The operation needs at least two family entries.
class TooFewEntriesError : public Error {
  public:
    using Error::Error;
};

/// A pairing of family indices is malformed or pairs identical partitions.
class InvalidPairingError : public Error {
  public:
    using Error::Error;
};

/// A mechanism range must be nonempty.
class EmptyRangeError : public Error {
  public:
    using Error::Error;
};

/// The chosen allocation is not a member of the range.
class NotInRangeError : public Error {
  public:
    using Error::Error;
};

/// An item embedding is not injective or maps outside the universe.
class InvalidEmbeddingError : public Error {
  public:
    using Error::Error;
};

/// A reduction was asked to use a set the range does not shatter.
class NotShatteredError : public Error {
  public:
    using Error::Error;
};

/// A block design does not fit into the universe.
class InfeasibleDesignError : public Error {
  public:
    using Error::Error;
};

/// A set family that must be regular (uniform entry size) is not.
class NotRegularError : public Error {
  public:
    using Error::Error;
};

/// A block design is malformed for the requested lift.
class InvalidDesignError : public Error {
  public:
    using Error::Error;
};

/// Input (JSON, CSV, config) failed strict validation.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// A guaranteed identity failed at runtime; always a bug or a broken input.
class AssertionFailedError : public Error {
  public:
    using Error::Error;
};

}  // namespace pvc

#endif
