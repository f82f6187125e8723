#ifndef PMSP_ERRORS_HPP_
#define PMSP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pmsp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (graph6 / edge-list). Message names the line or byte.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A named vertex/edge/set does not exist or is out of range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Structural precondition failed (e.g. ear decomposition of a graph that is
// not 2-connected).
class StructureError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured exhaustive-computation limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A recurrence rule's hypothesis does not hold for the given input. The
// dispatcher treats this as "try another rule"; it never computes a wrong
// value silently.
class RuleInapplicableError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition failed (e.g. clique H-representation requested
// for a graph where it does not describe the stable set polytope).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed; indicates a bug or an unsound input, never
// a user mistake.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmsp

#endif  // PMSP_ERRORS_HPP_
