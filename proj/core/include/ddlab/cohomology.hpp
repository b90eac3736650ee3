#pragma once

#include "ddlab/double_complex.hpp"
#include "ddlab/subspace.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace ddlab {

/// U / V with V inside U, both subspaces of E^{p,q}.
///
/// Classes are represented by a complement R of V in U (columns of reps())
/// and read back through a left inverse of [R | basis(V)].
class Subquotient {
 public:
  Subquotient() = default;
  /// Throws TheoremViolation when V is not contained in U.
  Subquotient(Bidegree at, Subspace u, Subspace v);

  Bidegree at() const { return at_; }
  const Subspace& U() const { return u_; }
  const Subspace& V() const { return v_; }
  std::size_t ambient_dim() const { return u_.ambient_dim(); }
  std::size_t dim() const { return reps_.cols(); }

  /// ambient x dim: one representative per basis class.
  const Matrix& reps() const { return reps_; }
  /// Class coordinates of a vector of U; throws std::invalid_argument if outside U.
  Vector class_of(const Vector& u) const;
  /// dim x ambient; exact on U, arbitrary elsewhere.
  const Matrix& class_map() const { return class_map_; }

 private:
  Bidegree at_;
  Subspace u_, v_;
  Matrix reps_;
  Matrix class_map_;
};

struct IllDefinedMap : std::logic_error {
  using std::logic_error::logic_error;
};

/// A linear map between subquotients induced by an ambient linear map.
struct InducedMap {
  Matrix matrix;  // target.dim x source.dim
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;

  std::size_t rank() const;
  Subspace kernel() const;  // in source class coordinates
  Subspace image() const;   // in target class coordinates
  bool injective() const { return rank() == source_dim; }
  bool surjective() const { return rank() == target_dim; }
};

/// Checks ambient(U_src) in U_tgt and ambient(V_src) in V_tgt; throws
/// IllDefinedMap otherwise. `ambient` maps the source's E^{p,q} to the
/// target's; pass an identity for maps induced by the identity.
InducedMap induced_map(const Subquotient& src, const Subquotient& tgt, const Matrix& ambient);
InducedMap identity_induced(const Subquotient& src, const Subquotient& tgt);

enum class Space {
  h_dbar, h_d, h_bc, h_a,
  a, b, c, d, e, f,
  b_tilde, c_tilde, d_tilde, e_tilde,
};
inline constexpr std::size_t kSpaceCount = 14;
inline constexpr std::array<Space, kSpaceCount> kAllSpaces{
    Space::h_dbar, Space::h_d,     Space::h_bc,    Space::h_a,     Space::a,
    Space::b,      Space::c,       Space::d,       Space::e,       Space::f,
    Space::b_tilde, Space::c_tilde, Space::d_tilde, Space::e_tilde};

/// JSON key: h_dbar, h_d, h_bc, h_a, a ... f, b_tilde ...
const char* key(Space s);
/// Human label: H_dbar, H_BC, A, B~, ...
const char* label(Space s);

struct Numbers {
  std::array<std::size_t, kSpaceCount> v{};
  std::size_t operator[](Space s) const { return v[static_cast<std::size_t>(s)]; }
  std::size_t& operator[](Space s) { return v[static_cast<std::size_t>(s)]; }
  friend bool operator==(const Numbers&, const Numbers&) = default;
};

struct InvariantTable {
  IntRange p_range, q_range;
  std::map<Bidegree, Numbers> at;
  std::map<int, std::size_t> betti;

  /// Zero outside the stored range.
  std::size_t get(Space s, int p, int q) const;
  std::size_t betti_at(int k) const;
  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

/// Every cohomology group and every space A..F of a validated complex, built
/// lazily and cached. Safe to share across threads.
class CohomologyEngine {
 public:
  /// Throws InvalidComplex when dc fails validation.
  explicit CohomologyEngine(DoubleComplex dc);

  const DoubleComplex& complex() const { return dc_; }
  const TotalComplex& total() const { return total_; }

  /// The ingredients at (p,q): kernels of del, delbar, del delbar out of
  /// E^{p,q} and images of del, delbar, del delbar into it.
  struct Pieces {
    Subspace ker_del, ker_dbar, ker_ddbar;
    Subspace im_del, im_dbar, im_ddbar;
  };
  const Pieces& pieces(int p, int q) const;

  const Subquotient& space(Space s, int p, int q) const;
  std::size_t dim(Space s, int p, int q) const { return space(s, p, q).dim(); }

  std::size_t betti(int k) const;
  InvariantTable table() const;

 private:
  Subquotient build(Space s, int p, int q) const;

  DoubleComplex dc_;
  TotalComplex total_;
  mutable std::mutex mu_;
  mutable std::map<Bidegree, std::unique_ptr<Pieces>> pieces_;
  mutable std::map<std::pair<Space, Bidegree>, std::unique_ptr<Subquotient>> spaces_;
};

/// Table of a complex in one call.
InvariantTable invariant_table(const DoubleComplex& dc);

/// Entry-wise sum over the union of ranges (for direct-sum additivity).
InvariantTable add_tables(const InvariantTable& a, const InvariantTable& b);

}  // namespace ddlab
