#pragma once

#include "ddlab/pipeline.hpp"

#include <filesystem>
#include <string>

namespace ddlab::test {

inline std::filesystem::path corpus_dir() { return DDLAB_TEST_CORPUS; }

inline LoadedInput corpus_input(const std::string& file, const ParamAssignment& params = {}) {
  return load_input(corpus_dir() / file, params, file);
}

inline DoubleComplex corpus_complex(const std::string& file, const ParamAssignment& params = {}) {
  return corpus_input(file, params).complex;
}

// 1x1 blocks given as integers.
inline Matrix m1(long v) { return Matrix(1, 1, {Scalar(v)}); }

// E^{0,0} -> E^{1,0} isomorphism, nothing else.
inline DoubleComplex horizontal_zigzag() {
  DoubleComplex dc({0, 1}, {0, 1});
  dc.set_dim(0, 0, 1);
  dc.set_dim(1, 0, 1);
  dc.set_del(0, 0, m1(1));
  return dc;
}

// Unit square with both differentials isomorphisms; `sign` = -1 breaks it.
inline DoubleComplex square(long sign = 1) {
  DoubleComplex dc({0, 1}, {0, 1});
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) dc.set_dim(p, q, 1);
  dc.set_del(0, 0, m1(1));
  dc.set_del(0, 1, m1(-sign));
  dc.set_delbar(0, 0, m1(1));
  dc.set_delbar(1, 0, m1(1));
  return dc;
}

inline DoubleComplex dot() {
  DoubleComplex dc({0, 0}, {0, 0});
  dc.set_dim(0, 0, 1);
  return dc;
}

}  // namespace ddlab::test
