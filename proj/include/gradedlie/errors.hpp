#pragma once

#include <stdexcept>
#include <string>

namespace gradedlie {

/// Raised when a document or literal cannot be decoded; the message carries
/// the location of the offending field (e.g. "brackets[3].value[2]").
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when values from incompatible carriers are combined: ragged rows,
/// ambient-dimension mismatches, group-backend mismatches.
struct mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gradedlie
