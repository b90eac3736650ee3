#include "ddlab/lie/lie_model.hpp"

#include "ddlab/subspace.hpp"

#include <bit>
#include <stdexcept>

namespace ddlab {

namespace {

// k-subsets of {0..n-1} as bitmasks, in lexicographic order of their sorted
// element lists.
void combinations(int n, int k, int start, Mask acc, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= n - k; ++i) combinations(n, k - 1, i + 1, acc | (Mask{1} << i), out);
}

using Sparse = std::vector<std::pair<Mask, Scalar>>;

}  // namespace

WedgeAlgebra::WedgeAlgebra(int n) : n_(n) {
  if (n < 1 || n > 6) throw std::invalid_argument("wedge algebra dimension must be in 1..6");
  index_.assign(size(), 0);
  basis_.assign(n + 1, std::vector<std::vector<Mask>>(n + 1));
  std::vector<std::vector<Mask>> subsets(n + 1);
  for (int k = 0; k <= n; ++k) combinations(n, k, 0, 0, subsets[k]);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      auto& b = basis_[p][q];
      for (Mask i : subsets[p])
        for (Mask j : subsets[q]) {
          index_[i | (j << n)] = b.size();
          b.push_back(i | (j << n));
        }
    }
}

int WedgeAlgebra::degree(Mask m) { return std::popcount(m); }

Bidegree WedgeAlgebra::bidegree(Mask m) const {
  Mask low = (Mask{1} << n_) - 1;
  return {std::popcount(m & low), std::popcount(m >> n_)};
}

int WedgeAlgebra::wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Each (i in a, j in b) with i > j is one transposition.
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

std::pair<Mask, int> WedgeAlgebra::conj(Mask m) const {
  Mask low = (Mask{1} << n_) - 1;
  Mask i = m & low, j = m >> n_;
  // conj(phi_I ^ phibar_J) = phibar_I ^ phi_J = (-1)^{|I||J|} phi_J ^ phibar_I
  int sign = (std::popcount(i) * std::popcount(j)) % 2 ? -1 : 1;
  return {j | (i << n_), sign};
}

const std::vector<Mask>& WedgeAlgebra::basis(int p, int q) const {
  static const std::vector<Mask> empty;
  if (p < 0 || q < 0 || p > n_ || q > n_) return empty;
  return basis_[p][q];
}

Form Form::monomial(std::size_t size, Mask m, Scalar coef) {
  Form f(size);
  f.c_[m] = std::move(coef);
  return f;
}

bool Form::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Form& Form::operator+=(const Form& o) {
  if (o.size() != size()) throw std::invalid_argument("forms from different algebras");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.size() != size()) throw std::invalid_argument("forms from different algebras");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

Form& Form::operator*=(const Scalar& s) {
  for (auto& c : c_)
    if (!c.is_zero()) c *= s;
  return *this;
}

Form wedge(const Form& a, const Form& b) {
  if (a.size() != b.size()) throw std::invalid_argument("forms from different algebras");
  Form out(a.size());
  for (Mask x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (Mask y = 0; y < b.size(); ++y) {
      if (b[y].is_zero() || (x & y)) continue;
      Scalar t = a[x] * b[y];
      if (WedgeAlgebra::wedge_sign(x, y) < 0) t = -t;
      out[x | y] += t;
    }
  }
  return out;
}

namespace {

// Differentials of all 2n letters (bit order) with parameters substituted.
std::vector<Sparse> letter_differentials(const StructureEquations& se, const ParamAssignment& pa,
                                         const WedgeAlgebra& alg) {
  const int n = alg.n();
  std::vector<Sparse> out(2 * n);
  for (int k = 0; k < n; ++k) {
    std::map<Mask, Scalar> acc;
    for (const SeTerm& t : se.differentials[k]) {
      Scalar c = t.coef;
      if (t.param) {
        auto it = pa.find(*t.param);
        if (it == pa.end()) throw InputError("parameter '" + *t.param + "' has no value");
        c *= Scalar(it->second);
      }
      Mask m = 0;
      int sign = 1;
      for (const Letter& l : t.monomial) {
        Mask bit = Mask{1} << (l.gen + (l.conj ? n : 0));
        int s = WedgeAlgebra::wedge_sign(m, bit);
        sign *= s;
        m |= bit;
      }
      if (sign == 0 || c.is_zero()) continue;
      acc[m] += sign < 0 ? -c : c;
    }
    for (auto& [m, c] : acc) {
      if (c.is_zero()) continue;
      out[k].emplace_back(m, c);
      auto [cm, s] = alg.conj(m);
      out[n + k].emplace_back(cm, s < 0 ? -c.conj() : c.conj());
    }
  }
  return out;
}

}  // namespace

bool unimodularity(const StructureEquations& se, const ParamAssignment& pa) {
  WedgeAlgebra alg(se.n);
  auto dl = letter_differentials(se, pa, alg);
  const int letters = 2 * se.n;
  // d theta^c = sum_{a<b} k^c_{ab} theta^a ^ theta^b, so [e_a, e_b] = -sum_c k^c_{ab} e_c
  // and tr ad_{e_a} = sum_{c != a} (coefficient of e_c in [e_a, e_c]).
  auto k = [&](int c, int a, int b) -> Scalar {
    Mask m = (Mask{1} << a) | (Mask{1} << b);
    for (const auto& [mm, v] : dl[c])
      if (mm == m) return v;
    return Scalar(0);
  };
  for (int a = 0; a < letters; ++a) {
    Scalar tr;
    for (int c = 0; c < letters; ++c) {
      if (c == a) continue;
      tr += c > a ? -k(c, a, c) : k(c, c, a);
    }
    if (!tr.is_zero()) return false;
  }
  return true;
}

LieModel::LieModel(StructureEquations se, ParamAssignment pa)
    : se_(std::move(se)), pa_(std::move(pa)), alg_(se_.n) {
  const int n = alg_.n();
  auto dl = letter_differentials(se_, pa_, alg_);
  d_letter_.reserve(dl.size());
  for (const auto& s : dl) {
    Form f(alg_.size());
    for (const auto& [m, c] : s) f[m] += c;
    d_letter_.push_back(std::move(f));
  }

  // d^2 = 0 on generators is the evaluated Jacobi identity; Leibniz then
  // gives d^2 = 0 everywhere.
  for (int k = 0; k < n; ++k)
    if (!d(d_letter_[k]).is_zero())
      throw NotAComplex(se_.generators[k], "d(d " + se_.generators[k] +
                                               ") != 0 after parameter substitution: the equations do not define a Lie algebra");

  dc_ = DoubleComplex({0, n}, {0, n});
  dc_.set_n(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) dc_.set_dim(p, q, alg_.basis(p, q).size());
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Matrix del = dc_.del(p, q), delbar = dc_.delbar(p, q);
      const auto& b = alg_.basis(p, q);
      for (std::size_t col = 0; col < b.size(); ++col) {
        Form dx = d_monomial(b[col]);
        for (Mask m = 0; m < dx.size(); ++m) {
          if (dx[m].is_zero()) continue;
          Bidegree bd = alg_.bidegree(m);
          if (bd == Bidegree{p + 1, q})
            del(alg_.index(m), col) = dx[m];
          else if (bd == Bidegree{p, q + 1})
            delbar(alg_.index(m), col) = dx[m];
          else
            throw std::logic_error("d leaves bidegrees (1,0) + (0,1)");
        }
      }
      dc_.set_del(p, q, std::move(del));
      dc_.set_delbar(p, q, std::move(delbar));
    }

  RealStructure rs;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Matrix s(alg_.basis(q, p).size(), alg_.basis(p, q).size());
      for (Mask m : alg_.basis(p, q)) {
        auto [cm, sign] = alg_.conj(m);
        s(alg_.index(cm), alg_.index(m)) = Scalar(sign);
      }
      rs.sigma[{p, q}] = std::move(s);
    }
  dc_.real = std::move(rs);

  unimodular_ = unimodularity(se_, pa_);
  dc_.flags.is_lie_model = true;
  dc_.flags.unimodular = unimodular_;
  // The top monomial survives in cohomology iff d of every (2n-1)-form has no
  // top component.
  bool top_survives = true;
  for (int p = n - 1; p <= n; ++p)
    for (Mask m : alg_.basis(p, 2 * n - 1 - p))
      if (!top_coefficient(d_monomial(m)).is_zero()) top_survives = false;
  dc_.flags.connected_top = top_survives;
}

Form LieModel::letter(std::size_t k, bool conj) const {
  if (k >= static_cast<std::size_t>(n())) throw std::out_of_range("generator index");
  return Form::monomial(alg_.size(), Mask{1} << (k + (conj ? n() : 0)));
}

Form LieModel::letter(std::string_view name) const {
  if (auto k = se_.generator_index(name)) return letter(*k, false);
  auto at = name.rfind("bar");
  if (at != std::string_view::npos) {
    std::string stem(name.substr(0, at));
    std::string tail(name.substr(at + 3));
    if (auto k = se_.generator_index(stem + tail)) return letter(*k, true);
  }
  throw InputError("unknown generator '" + std::string(name) + "'");
}

Form LieModel::d_monomial(Mask m) const {
  Form out(alg_.size());
  int position = 0;
  for (Mask rest = m; rest; rest &= rest - 1, ++position) {
    int bit = std::countr_zero(rest);
    Mask self = Mask{1} << bit;
    Mask prefix = m & (self - 1);
    Mask suffix = m & ~(prefix | self);
    const Form& dl = d_letter_[bit];
    for (Mask t = 0; t < dl.size(); ++t) {
      if (dl[t].is_zero() || (t & (prefix | suffix))) continue;
      int sign = (position % 2 ? -1 : 1) * WedgeAlgebra::wedge_sign(prefix, t) *
                 WedgeAlgebra::wedge_sign(prefix | t, suffix);
      out[prefix | t | suffix] += sign < 0 ? -dl[t] : dl[t];
    }
  }
  return out;
}

Form LieModel::d(const Form& x) const {
  Form out(alg_.size());
  for (Mask m = 0; m < x.size(); ++m)
    if (!x[m].is_zero()) out += d_monomial(m) * x[m];
  return out;
}

Form LieModel::conj(const Form& x) const {
  Form out(alg_.size());
  for (Mask m = 0; m < x.size(); ++m) {
    if (x[m].is_zero()) continue;
    auto [cm, s] = alg_.conj(m);
    out[cm] = s < 0 ? -x[m].conj() : x[m].conj();
  }
  return out;
}

Vector LieModel::coordinates(const Form& x, int p, int q) const {
  const auto& b = alg_.basis(p, q);
  Vector v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = x[b[i]];
  return v;
}

Form LieModel::from_coordinates(const Vector& v, int p, int q) const {
  const auto& b = alg_.basis(p, q);
  if (v.size() != b.size()) throw DimensionMismatch("coordinate vector length differs from dim E^{p,q}");
  Form f(alg_.size());
  for (std::size_t i = 0; i < b.size(); ++i) f[b[i]] = v[i];
  return f;
}

}  // namespace ddlab
