#pragma once

#include <stdexcept>

namespace ddlab {

/// Malformed or unreadable input (maps to CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A check that is a theorem failed; this always signals an implementation bug.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// A manifold-only check was requested on an input that does not qualify.
struct GateViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ddlab
