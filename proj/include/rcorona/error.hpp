#pragma once

#include <stdexcept>
#include <string>

namespace rcorona {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphErrorKind { EndpointOutOfRange, SelfLoop, DuplicateEdge, InvalidParameters, Parse };

/// Malformed graph input: construction, generator parameters, or file parsing.
struct GraphError : Error {
  GraphError(GraphErrorKind kind, const std::string& what) : Error(what), kind(kind) {}
  GraphErrorKind kind;
};

/// Input outside an operation's domain (non-symmetric matrix, isolated vertex, non-regular graph...).
struct InputError : Error {
  using Error::Error;
};

/// A stated hypothesis of a corona construction or closed-form result does not hold.
struct HypothesisError : Error {
  using Error::Error;
};

/// Rational function evaluated at its pole.
struct PoleError : Error {
  PoleError(double pole, const std::string& what) : Error(what), pole(pole) {}
  double pole;
};

/// Non-convergence or an internal consistency failure; indicates a bug or a pathological input.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace rcorona
