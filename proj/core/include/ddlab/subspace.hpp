#pragma once

#include "ddlab/matrix.hpp"

#include <optional>
#include <stdexcept>

namespace ddlab {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A linear subspace of Q(i)^n held by its reduced column-echelon basis.
///
/// The basis is canonical, so equality is entrywise equality of bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Span of the columns of `generators`.
  static Subspace span(const Matrix& generators);
  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t j) const { return basis_.column(j); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates c with basis() * c == v, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
/// Image of a subspace under a linear map.
Subspace image(const Matrix& m, const Subspace& s);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace ddlab
