#include "ddlab/subspace.hpp"

namespace ddlab {

Subspace Subspace::span(const Matrix& generators) {
  Subspace s(generators.rows());
  s.basis_ = column_echelon(generators);
  for (std::size_t c = 0; c < s.basis_.cols(); ++c)
    for (std::size_t r = 0; r < s.basis_.rows(); ++r)
      if (!s.basis_(r, c).is_zero()) {
        s.pivot_rows_.push_back(r);
        break;
      }
  return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  // In reduced column-echelon form the j-th coordinate is read off the j-th pivot row.
  Vector c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = v[pivot_rows_[j]];
  if (basis_ * c != v) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("containment across ambient dimensions");
  if (other.dim() > dim()) return false;
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_vector(j))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : re.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = Scalar(1);
    for (std::size_t r = 0; r < re.pivots.size(); ++r) x[re.pivots[r]] = -re.reduced(r, f);
    gens.push_back(std::move(x));
  }
  return Subspace::span(Matrix::from_columns(n, gens));
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionMismatch("map domain differs from subspace ambient");
  return Subspace::span(m * s.basis());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // Solutions of A y = B z; the intersection is spanned by A y.
  Subspace sol = kernel(hstack(a.basis(), b.basis() * Scalar(-1)));
  Matrix top(a.dim(), sol.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < sol.dim(); ++c) top(r, c) = sol.basis()(r, c);
  return Subspace::span(a.basis() * top);
}

}  // namespace ddlab
