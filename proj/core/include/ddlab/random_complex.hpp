#pragma once

#include "ddlab/double_complex.hpp"

#include <cstdint>
#include <random>

namespace ddlab {

/// Small deterministic source of random exact scalars; same seed, same stream
/// on every platform (only raw mt19937_64 output is used).
class ScalarRng {
 public:
  explicit ScalarRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin(unsigned percent) { return below(100) < percent; }

  /// Small Gaussian rational, possibly zero.
  Scalar any();
  Scalar nonzero();

 private:
  std::mt19937_64 engine_;
};

/// Random invertible blocks at every nonzero bidegree of `dc`.
BigradedIso random_iso(const DoubleComplex& dc, ScalarRng& rng);

/// Direct sum of dots, squares and zigzags in a box of at most 4 x 4
/// bidegrees, total dimension exactly `size_budget`, followed by a random
/// base change. Deterministic in `seed`; always validates.
DoubleComplex random_complex(std::uint64_t seed, std::size_t size_budget);

}  // namespace ddlab
