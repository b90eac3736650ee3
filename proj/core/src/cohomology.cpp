#include "ddlab/cohomology.hpp"

#include "ddlab/errors.hpp"

namespace ddlab {

Subquotient::Subquotient(Bidegree at, Subspace u, Subspace v) : at_(at), u_(std::move(u)), v_(std::move(v)) {
  if (!u_.contains(v_))
    throw TheoremViolation("subquotient at (" + at.key() + "): denominator is not contained in numerator");
  const std::size_t n = u_.ambient_dim();

  // Greedy complement of V inside U, scanning U's canonical basis.
  std::vector<Vector> reps;
  Subspace cur = v_;
  for (std::size_t j = 0; j < u_.dim() && cur.dim() < u_.dim(); ++j) {
    Vector x = u_.basis_vector(j);
    if (cur.contains(x)) continue;
    reps.push_back(x);
    cur = Subspace::span(hstack(cur.basis(), Matrix::from_columns(n, std::span<const Vector>(&x, 1))));
  }
  reps_ = Matrix::from_columns(n, reps);

  // [R | V] has full column rank; invert it on a set of independent rows.
  const std::size_t k = u_.dim();
  class_map_ = Matrix(reps_.cols(), n);
  if (k == 0 || reps_.cols() == 0) return;
  Matrix b = hstack(reps_, v_.basis());
  RowEchelon re = row_reduce(b.transpose());
  Matrix square(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) square(i, c) = b(re.pivots[i], c);
  auto inv = inverse(square);
  if (!inv) throw TheoremViolation("subquotient basis is not independent");
  for (std::size_t i = 0; i < reps_.cols(); ++i)
    for (std::size_t j = 0; j < k; ++j) class_map_(i, re.pivots[j]) = (*inv)(i, j);
}

Vector Subquotient::class_of(const Vector& u) const {
  if (!u_.contains(u)) throw std::invalid_argument("vector is not in the numerator of the subquotient");
  return class_map_ * u;
}

std::size_t InducedMap::rank() const { return ddlab::rank(matrix); }
Subspace InducedMap::kernel() const { return ddlab::kernel(matrix); }
Subspace InducedMap::image() const { return ddlab::image(matrix); }

InducedMap induced_map(const Subquotient& src, const Subquotient& tgt, const Matrix& ambient) {
  if (ambient.cols() != src.ambient_dim() || ambient.rows() != tgt.ambient_dim())
    throw DimensionMismatch("induced map: ambient map shape does not match the subquotients");
  auto check = [&](const Subspace& from, const Subspace& into, const char* what) {
    for (std::size_t j = 0; j < from.dim(); ++j)
      if (!into.contains(ambient * from.basis_vector(j)))
        throw IllDefinedMap(std::string("induced map (") + src.at().key() + ") -> (" + tgt.at().key() +
                            ") is ill-defined: " + what);
  };
  check(src.U(), tgt.U(), "numerator not mapped into numerator");
  check(src.V(), tgt.V(), "denominator not mapped into denominator");
  InducedMap m;
  m.source_dim = src.dim();
  m.target_dim = tgt.dim();
  m.matrix = tgt.class_map() * (ambient * src.reps());
  return m;
}

InducedMap identity_induced(const Subquotient& src, const Subquotient& tgt) {
  return induced_map(src, tgt, Matrix::identity(src.ambient_dim()));
}

const char* key(Space s) {
  switch (s) {
    case Space::h_dbar: return "h_dbar";
    case Space::h_d: return "h_d";
    case Space::h_bc: return "h_bc";
    case Space::h_a: return "h_a";
    case Space::a: return "a";
    case Space::b: return "b";
    case Space::c: return "c";
    case Space::d: return "d";
    case Space::e: return "e";
    case Space::f: return "f";
    case Space::b_tilde: return "b_tilde";
    case Space::c_tilde: return "c_tilde";
    case Space::d_tilde: return "d_tilde";
    case Space::e_tilde: return "e_tilde";
  }
  return "?";
}

const char* label(Space s) {
  switch (s) {
    case Space::h_dbar: return "H_dbar";
    case Space::h_d: return "H_d";
    case Space::h_bc: return "H_BC";
    case Space::h_a: return "H_A";
    case Space::a: return "A";
    case Space::b: return "B";
    case Space::c: return "C";
    case Space::d: return "D";
    case Space::e: return "E";
    case Space::f: return "F";
    case Space::b_tilde: return "B~";
    case Space::c_tilde: return "C~";
    case Space::d_tilde: return "D~";
    case Space::e_tilde: return "E~";
  }
  return "?";
}

std::size_t InvariantTable::get(Space s, int p, int q) const {
  auto it = at.find({p, q});
  return it == at.end() ? 0 : it->second[s];
}

std::size_t InvariantTable::betti_at(int k) const {
  auto it = betti.find(k);
  return it == betti.end() ? 0 : it->second;
}

CohomologyEngine::CohomologyEngine(DoubleComplex dc) : dc_(std::move(dc)), total_(total_complex(dc_)) {}

const CohomologyEngine::Pieces& CohomologyEngine::pieces(int p, int q) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = pieces_.find({p, q}); it != pieces_.end()) return *it->second;
  }
  auto pc = std::make_unique<Pieces>();
  pc->ker_del = kernel(dc_.del(p, q));
  pc->ker_dbar = kernel(dc_.delbar(p, q));
  pc->ker_ddbar = kernel(dc_.ddbar(p, q));
  pc->im_del = image(dc_.del(p - 1, q));
  pc->im_dbar = image(dc_.delbar(p, q - 1));
  pc->im_ddbar = image(dc_.ddbar(p - 1, q - 1));
  std::lock_guard lock(mu_);
  auto [it, _] = pieces_.emplace(Bidegree{p, q}, std::move(pc));
  return *it->second;
}

Subquotient CohomologyEngine::build(Space s, int p, int q) const {
  const Pieces& x = pieces(p, q);
  const Bidegree at{p, q};
  auto sq = [&](Subspace u, Subspace v) { return Subquotient(at, std::move(u), std::move(v)); };
  auto cap = subspace_intersect;
  auto cup = subspace_sum;
  switch (s) {
    case Space::h_dbar: return sq(x.ker_dbar, x.im_dbar);
    case Space::h_d: return sq(x.ker_del, x.im_del);
    case Space::h_bc: return sq(cap(x.ker_del, x.ker_dbar), x.im_ddbar);
    case Space::h_a: return sq(x.ker_ddbar, cup(x.im_del, x.im_dbar));
    case Space::a: return sq(cap(x.im_del, x.im_dbar), x.im_ddbar);
    case Space::b: return sq(cap(x.im_del, x.ker_dbar), x.im_ddbar);
    case Space::c: return sq(x.ker_ddbar, cup(x.im_del, x.ker_dbar));
    case Space::d: return sq(cap(x.ker_del, x.im_dbar), x.im_ddbar);
    case Space::e: return sq(x.ker_ddbar, cup(x.ker_del, x.im_dbar));
    case Space::f: return sq(x.ker_ddbar, cup(x.ker_del, x.ker_dbar));
    case Space::b_tilde: return sq(cap(x.im_del, x.ker_dbar), cap(x.im_del, x.im_dbar));
    case Space::c_tilde: return sq(cup(x.ker_del, x.ker_dbar), cup(x.im_del, x.ker_dbar));
    case Space::d_tilde: return sq(cap(x.ker_del, x.im_dbar), cap(x.im_del, x.im_dbar));
    case Space::e_tilde: return sq(cup(x.ker_del, x.ker_dbar), cup(x.ker_del, x.im_dbar));
  }
  throw std::logic_error("unknown space");
}

const Subquotient& CohomologyEngine::space(Space s, int p, int q) const {
  const auto k = std::make_pair(s, Bidegree{p, q});
  {
    std::lock_guard lock(mu_);
    if (auto it = spaces_.find(k); it != spaces_.end()) return *it->second;
  }
  auto sq = std::make_unique<Subquotient>(build(s, p, q));
  std::lock_guard lock(mu_);
  auto [it, _] = spaces_.emplace(k, std::move(sq));
  return *it->second;
}

std::size_t CohomologyEngine::betti(int k) const {
  const std::size_t n = total_.dim(k);
  return n - rank(total_.d_at(k)) - rank(total_.d_at(k - 1));
}

InvariantTable CohomologyEngine::table() const {
  InvariantTable t;
  t.p_range = dc_.p_range();
  t.q_range = dc_.q_range();
  for (auto [p, q] : dc_.bidegrees()) {
    Numbers nums;
    for (Space s : kAllSpaces) nums[s] = dim(s, p, q);
    t.at[{p, q}] = nums;
  }
  for (int k = total_.k_range.lo; k <= total_.k_range.hi; ++k) t.betti[k] = betti(k);
  return t;
}

InvariantTable invariant_table(const DoubleComplex& dc) { return CohomologyEngine(dc).table(); }

InvariantTable add_tables(const InvariantTable& a, const InvariantTable& b) {
  auto join = [](const IntRange& x, const IntRange& y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    return IntRange{std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
  };
  InvariantTable out;
  out.p_range = join(a.p_range, b.p_range);
  out.q_range = join(a.q_range, b.q_range);
  for (int p = out.p_range.lo; p <= out.p_range.hi; ++p)
    for (int q = out.q_range.lo; q <= out.q_range.hi; ++q) {
      Numbers n;
      for (Space s : kAllSpaces) n[s] = a.get(s, p, q) + b.get(s, p, q);
      out.at[{p, q}] = n;
    }
  if (!out.p_range.empty() && !out.q_range.empty())
    for (int k = out.p_range.lo + out.q_range.lo; k <= out.p_range.hi + out.q_range.hi; ++k)
      out.betti[k] = a.betti_at(k) + b.betti_at(k);
  return out;
}

}  // namespace ddlab
