#pragma once

#include <stdexcept>
#include <string>

namespace haarwell {

// Documented size cap (degree, expansion order, matrix dimension) exceeded.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation of a symbolic value at a point inside its pole set.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input: cycle notation, pairing strings, monomials, cache files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact elimination hit a rank deficiency; carries the rank that was found.
struct SingularMatrixError : std::runtime_error {
  int rank;
  SingularMatrixError(const std::string& what, int rank_found)
      : std::runtime_error(what), rank(rank_found) {}
};

// A persisted table failed its load-time inverse identity check.
struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace haarwell
