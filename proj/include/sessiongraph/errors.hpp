#pragma once

#include <stdexcept>
#include <string>

namespace sg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input record; message carries a "file:line" locator when known.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Role string not in the annotation vocabulary.
class UnknownRole : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Annotation whose is-bullying flag disagrees with its role or severity.
class InconsistentAnnotation : public Error {
 public:
  using Error::Error;
};

/// Severity aggregation over an empty annotator group.
class EmptyMajority : public Error {
 public:
  using Error::Error;
};

/// Candidate subgraph is not a valid motif (bad size or disconnected).
class NotAMotif : public Error {
 public:
  using Error::Error;
};

/// Prevalence requested over an empty session set.
class EmptyScope : public Error {
 public:
  using Error::Error;
};

/// Quadrant classification requested for a session without a bully score.
class Unclassifiable : public Error {
 public:
  using Error::Error;
};

/// Invariant violation inside the library; indicates a bug, not bad input.
class Internal : public Error {
 public:
  using Error::Error;
};

}  // namespace sg
