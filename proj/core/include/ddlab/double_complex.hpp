#pragma once

#include "ddlab/matrix.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ddlab {

struct Bidegree {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  std::string key() const { return std::to_string(p) + "," + std::to_string(q); }
};

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool contains(int x) const { return lo <= x && x <= hi; }
  bool empty() const { return hi < lo; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct GeometricFlags {
  bool is_lie_model = false;
  bool unimodular = false;
  bool connected_top = false;
  friend bool operator==(const GeometricFlags&, const GeometricFlags&) = default;
};

/// Antilinear involution E^{p,q} -> E^{q,p}: x |-> sigma(p,q) * conj(x).
struct RealStructure {
  std::map<Bidegree, Matrix> sigma;
};

/// One failed differential identity, with a basis column that witnesses it.
struct Violation {
  Bidegree at;
  std::string identity;
  std::size_t witness_column = 0;
  std::string to_string() const;
};

/// Bounded double complex with d' = del of bidegree (1,0) and d'' = delbar of
/// bidegree (0,1). Bidegrees outside the stored range are zero spaces, and an
/// unset map between nonzero spaces is the zero map.
class DoubleComplex {
 public:
  DoubleComplex() = default;
  DoubleComplex(IntRange p_range, IntRange q_range) : p_range_(p_range), q_range_(q_range) {}

  const IntRange& p_range() const { return p_range_; }
  const IntRange& q_range() const { return q_range_; }
  bool in_range(int p, int q) const { return p_range_.contains(p) && q_range_.contains(q); }
  std::vector<Bidegree> bidegrees() const;

  std::size_t dim(int p, int q) const;
  std::size_t total_dim() const;
  Matrix del(int p, int q) const;
  Matrix delbar(int p, int q) const;
  /// del(p, q+1) * delbar(p, q): E^{p,q} -> E^{p+1,q+1}.
  Matrix ddbar(int p, int q) const;

  void set_dim(int p, int q, std::size_t n);
  void set_del(int p, int q, Matrix m);
  void set_delbar(int p, int q, Matrix m);

  const std::map<Bidegree, Matrix>& del_table() const { return del_; }
  const std::map<Bidegree, Matrix>& delbar_table() const { return delbar_; }

  /// Complex dimension n. Lie models set it explicitly; otherwise the largest
  /// upper bound of the two ranges.
  int n() const;
  void set_n(int n) { n_ = n; }

  GeometricFlags flags;
  std::optional<RealStructure> real;

 private:
  void check_shape(const char* which, int p, int q, const Matrix& m, Bidegree target) const;

  IntRange p_range_;
  IntRange q_range_;
  std::map<Bidegree, std::size_t> dims_;
  std::map<Bidegree, Matrix> del_;
  std::map<Bidegree, Matrix> delbar_;
  std::optional<int> n_;
};

/// Empty iff del^2 = 0, delbar^2 = 0 and del delbar + delbar del = 0 everywhere.
std::vector<Violation> validate(const DoubleComplex& dc);

/// Checks sigma^2 = id and sigma del = delbar sigma; empty when no real structure.
std::vector<Violation> validate_real_structure(const DoubleComplex& dc);

struct InvalidComplex : std::runtime_error {
  explicit InvalidComplex(std::vector<Violation> v);
  std::vector<Violation> violations;
};

/// Simple complex E^k = sum_{p+q=k} E^{p,q}, blocks ordered by increasing p.
struct TotalComplex {
  IntRange k_range;
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> d;        // E^k -> E^{k+1}
  std::map<int, Matrix> dprime;   // bigraded del pieces
  std::map<int, Matrix> dsecond;  // bigraded delbar pieces
  std::map<Bidegree, std::size_t> block_offset;

  std::size_t dim(int k) const;
  Matrix d_at(int k) const;
  Matrix dprime_at(int k) const;
  Matrix dsecond_at(int k) const;
};

/// Throws InvalidComplex when `dc` fails validation.
TotalComplex total_complex(const DoubleComplex& dc);

/// Blockwise direct sum over the union of both ranges.
DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b);

struct BigradedIso {
  std::map<Bidegree, Matrix> maps;
};

/// Conjugates both differentials by g: g del g^-1, g delbar g^-1. Missing
/// blocks of g are identities. Throws std::invalid_argument on a singular block.
DoubleComplex base_change(const DoubleComplex& dc, const BigradedIso& g);

}  // namespace ddlab
