#pragma once

#include "ddlab/double_complex.hpp"
#include "ddlab/errors.hpp"

#include <string>
#include <string_view>

namespace ddlab {

/// Reads the `.dcx` JSON format:
///
///   { "p_range": [lo, hi], "q_range": [lo, hi],
///     "dims":   { "p,q": n, ... },
///     "del":    { "p,q": [[entry, ...], ...], ... },
///     "delbar": { "p,q": [[entry, ...], ...], ... },
///     "sigma":  { "p,q": [[...]] } }          (optional real structure)
///
/// Entries are Scalar text (JSON integers are accepted too). Missing keys mean
/// zero spaces and zero maps. Throws InputError on malformed input; the result
/// is not validated.
DoubleComplex load_dcx(std::string_view text);

/// Serializes deterministically (sorted keys, canonical Scalar text).
std::string save_dcx(const DoubleComplex& dc);

}  // namespace ddlab
