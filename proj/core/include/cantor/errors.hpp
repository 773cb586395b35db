#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

// Error taxonomy mirrored by the CLI exit codes:
// parse (2), domain (3), admissibility (4), internal consistency (5).

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A value outside the representable interval or an otherwise out-of-domain
// argument. The message names the violated bound.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An inadmissible digit or a misaligned period. The message names the
// offending index.
struct AdmissibilityError : std::runtime_error {
  explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: inconsistent shift state, an extracted digit
// out of range, or oracle disagreement.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cantor
