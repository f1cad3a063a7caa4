#pragma once

#include <stdexcept>
#include <string>

namespace classprod {

/// Caller violated a documented precondition (length mismatch, empty input).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value fell outside its admissible range, e.g. an angle outside [0, pi].
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Text could not be parsed.
class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeded a configured size cap (the inequality systems grow as 2^N).
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace classprod
