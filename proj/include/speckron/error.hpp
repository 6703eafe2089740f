#pragma once

#include <stdexcept>

namespace speckron {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: partitions, permutations, basis or family names.
struct ParseError : Error {
  using Error::Error;
};

/// A precondition on the arguments does not hold (unequal weights, degrees).
struct DomainError : Error {
  using Error::Error;
};

/// The request would enumerate beyond a fixed factorial bound.
struct CapacityError : Error {
  using Error::Error;
};

/// An integrality, positivity or classification check failed. These are
/// proven properties, so raising one means a bug or a false lemma.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace speckron
