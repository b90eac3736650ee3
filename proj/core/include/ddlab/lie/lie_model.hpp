#pragma once

#include "ddlab/double_complex.hpp"
#include "ddlab/lie/structure_equations.hpp"

#include <cstdint>
#include <vector>

namespace ddlab {

using Mask = std::uint32_t;

/// Exterior algebra on phi^1..phi^n, phibar^1..phibar^n. A basis monomial is a
/// bitmask: bit k is phi^{k+1}, bit n+k is phibar^{k+1}; factors are always
/// written in increasing bit order, i.e. all phi before all phibar.
class WedgeAlgebra {
 public:
  explicit WedgeAlgebra(int n);

  int n() const { return n_; }
  std::size_t size() const { return std::size_t{1} << (2 * n_); }
  Mask top() const { return static_cast<Mask>(size() - 1); }

  static int degree(Mask m);
  Bidegree bidegree(Mask m) const;
  /// Sign of x_a ^ x_b against the sorted monomial a|b (0 when they overlap).
  static int wedge_sign(Mask a, Mask b);
  /// Conjugate monomial and the sign of reordering it into standard order.
  std::pair<Mask, int> conj(Mask m) const;

  /// Monomials of bidegree (p,q), ordered by I lexicographically, then J.
  const std::vector<Mask>& basis(int p, int q) const;
  /// Position of m inside basis(bidegree(m)).
  std::size_t index(Mask m) const { return index_[m]; }

 private:
  int n_;
  std::vector<std::vector<std::vector<Mask>>> basis_;  // [p][q]
  std::vector<std::size_t> index_;
};

/// Dense element of the exterior algebra.
class Form {
 public:
  Form() = default;
  explicit Form(std::size_t size) : c_(size) {}

  static Form monomial(std::size_t size, Mask m, Scalar coef = Scalar(1));

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](Mask m) const { return c_[m]; }
  Scalar& operator[](Mask m) { return c_[m]; }
  bool is_zero() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& s) { return a *= s; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::vector<Scalar> c_;
};

Form wedge(const Form& a, const Form& b);

/// The invariant-form model of a Lie algebra with complex structure: wedge
/// algebra, exterior derivative extended by the graded Leibniz rule, and the
/// resulting double complex with its conjugation.
class LieModel {
 public:
  LieModel(StructureEquations se, ParamAssignment pa);

  const StructureEquations& equations() const { return se_; }
  const ParamAssignment& params() const { return pa_; }
  const WedgeAlgebra& algebra() const { return alg_; }
  int n() const { return alg_.n(); }

  /// phi^{k+1} (conj = false) or its conjugate.
  Form letter(std::size_t k, bool conj = false) const;
  Form letter(std::string_view name) const;
  Form one() const { return Form::monomial(alg_.size(), 0); }

  Form d(const Form& x) const;
  Form conj(const Form& x) const;
  Scalar top_coefficient(const Form& x) const { return x[alg_.top()]; }
  Form wedge(const Form& a, const Form& b) const { return ddlab::wedge(a, b); }

  /// Coordinates of the (p,q) component of x in basis(p,q), and back.
  Vector coordinates(const Form& x, int p, int q) const;
  Form from_coordinates(const Vector& v, int p, int q) const;

  /// Double complex with flags and real structure set.
  const DoubleComplex& complex() const { return dc_; }

  /// trace ad_x = 0 for every x of the realified algebra.
  bool unimodular() const { return unimodular_; }

 private:
  Form d_monomial(Mask m) const;

  StructureEquations se_;
  ParamAssignment pa_;
  WedgeAlgebra alg_;
  std::vector<Form> d_letter_;  // indexed by bit
  DoubleComplex dc_;
  bool unimodular_ = false;
};

/// d(d(x)) != 0 on a generator after parameters are substituted.
struct NotAComplex : InputError {
  NotAComplex(std::string generator, std::string message)
      : InputError(std::move(message)), generator(std::move(generator)) {}
  std::string generator;
};

/// Structure constants trace test on the evaluated equations (2n letters).
bool unimodularity(const StructureEquations& se, const ParamAssignment& pa);

}  // namespace ddlab
