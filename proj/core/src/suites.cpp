#include "ddlab/suites.hpp"

#include "ddlab/errors.hpp"
#include "ddlab/lie/lie_model.hpp"

#include <array>

namespace ddlab {

std::string CheckFailure::to_string() const {
  std::string s = check + " at " + where;
  if (!detail.empty()) s += ": " + detail;
  return s;
}

bool SuiteReport::expect(bool cond, std::string check, std::string where, std::string detail) {
  ++checks;
  if (!cond) failures.push_back({std::move(check), std::move(where), std::move(detail)});
  return cond;
}

void SuiteReport::merge(const SuiteReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string at_string(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

const std::vector<Space>& sequence_nodes(int which) {
  using S = Space;
  static const std::array<std::vector<Space>, 8> table{{
      {S::a, S::b, S::h_dbar, S::h_a, S::c},
      {S::d, S::h_bc, S::h_dbar, S::e, S::f},
      {S::a, S::d, S::h_d, S::h_a, S::e},
      {S::b, S::h_bc, S::h_d, S::c, S::f},
      {S::b_tilde, S::h_dbar, S::h_a, S::c},
      {S::d, S::h_bc, S::h_dbar, S::e_tilde},
      {S::d_tilde, S::h_d, S::h_a, S::e},
      {S::b, S::h_bc, S::h_d, S::c_tilde},
  }};
  if (which < 1 || which > 8) throw std::out_of_range("sequence number must be 1..8");
  return table[static_cast<std::size_t>(which - 1)];
}

SequenceReport verify_sequence(const CohomologyEngine& eng, int which, int p, int q) {
  const auto& nodes = sequence_nodes(which);
  SequenceReport r;
  r.which = which;
  r.at = {p, q};

  std::vector<const Subquotient*> x;
  for (Space s : nodes) {
    x.push_back(&eng.space(s, p, q));
    r.dims.push_back(x.back()->dim());
  }
  std::vector<InducedMap> f;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    try {
      f.push_back(identity_induced(*x[i], *x[i + 1]));
    } catch (const IllDefinedMap& e) {
      r.failures.push_back(std::string(label(nodes[i])) + " -> " + label(nodes[i + 1]) + ": " + e.what());
      return r;
    }
    r.ranks.push_back(f.back().rank());
  }

  if (!f.front().injective())
    r.failures.push_back(std::string("not injective at ") + label(nodes.front()) + " (rank " +
                         std::to_string(r.ranks.front()) + " < " + std::to_string(r.dims.front()) + ")");
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    if (f[i - 1].image() != f[i].kernel())
      r.failures.push_back(std::string("image != kernel at ") + label(nodes[i]) + " (image " +
                           std::to_string(f[i - 1].rank()) + ", kernel " + std::to_string(f[i].kernel().dim()) +
                           ")");
  }
  if (!f.back().surjective())
    r.failures.push_back(std::string("not surjective onto ") + label(nodes.back()) + " (rank " +
                         std::to_string(r.ranks.back()) + " < " + std::to_string(r.dims.back()) + ")");
  return r;
}

namespace {

void expect_bijective(SuiteReport& rep, const char* name, const Subquotient& src, const Subquotient& tgt,
                      const Matrix& ambient, int p, int q) {
  try {
    InducedMap m = induced_map(src, tgt, ambient);
    rep.expect(m.injective() && m.surjective(), name, at_string(p, q),
               "dims " + std::to_string(m.source_dim) + " -> " + std::to_string(m.target_dim) + ", rank " +
                   std::to_string(m.rank()));
  } catch (const IllDefinedMap& e) {
    rep.expect(false, name, at_string(p, q), e.what());
  }
}

std::string eq_detail(std::size_t l, std::size_t r) { return std::to_string(l) + " vs " + std::to_string(r); }

}  // namespace

SuiteReport isomorphism_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "isomorphisms";
  const DoubleComplex& dc = eng.complex();
  for (auto [p, q] : dc.bidegrees()) {
    expect_bijective(rep, "delbar: C -> D(q+1)", eng.space(Space::c, p, q), eng.space(Space::d, p, q + 1),
                     dc.delbar(p, q), p, q);
    expect_bijective(rep, "del: E -> B(p+1)", eng.space(Space::e, p, q), eng.space(Space::b, p + 1, q),
                     dc.del(p, q), p, q);
  }
  return rep;
}

SuiteReport sequence_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "sequences";
  for (auto [p, q] : eng.complex().bidegrees()) {
    for (int w = 1; w <= 8; ++w) {
      SequenceReport s = verify_sequence(eng, w, p, q);
      std::string detail;
      for (const auto& f : s.failures) detail += (detail.empty() ? "" : "; ") + f;
      rep.expect(s.exact(), "sequence " + std::to_string(w) + " exact", at_string(p, q), detail);
    }
  }
  rep.merge(isomorphism_suite(eng));
  return rep;
}

SuiteReport identity_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "identities";
  const DoubleComplex& dc = eng.complex();
  auto h = [&](Space s, int p, int q) { return eng.dim(s, p, q); };
  auto eq = [&](std::size_t l, std::size_t r, const char* what, int p, int q) {
    rep.expect(l == r, what, at_string(p, q), eq_detail(l, r));
  };
  auto le = [&](std::size_t l, std::size_t r, const char* what, int p, int q) {
    rep.expect(l <= r, what, at_string(p, q), eq_detail(l, r));
  };
  using S = Space;

  for (auto [p, q] : dc.bidegrees()) {
    const std::size_t hdb = h(S::h_dbar, p, q), hd = h(S::h_d, p, q), hbc = h(S::h_bc, p, q), ha = h(S::h_a, p, q);
    const std::size_t a = h(S::a, p, q), b = h(S::b, p, q), c = h(S::c, p, q), d = h(S::d, p, q),
                      e = h(S::e, p, q), f = h(S::f, p, q);
    const std::size_t bt = h(S::b_tilde, p, q), ct = h(S::c_tilde, p, q), dt = h(S::d_tilde, p, q),
                      et = h(S::e_tilde, p, q);

    eq(b, bt + a, "b = b~ + a", p, q);
    eq(d, dt + a, "d = d~ + a", p, q);
    eq(c, ct + f, "c = c~ + f", p, q);
    eq(e, et + f, "e = e~ + f", p, q);

    le(b, hbc, "b <= h_bc", p, q);
    le(d, hbc, "d <= h_bc", p, q);
    le(c, ha, "c <= h_a", p, q);
    le(e, ha, "e <= h_a", p, q);

    eq(ha + bt, hdb + c, "h_a + b~ = h_dbar + c", p, q);
    eq(ha + dt, hd + e, "h_a + d~ = h_d + e", p, q);
    eq(hbc + et, hdb + d, "h_bc + e~ = h_dbar + d", p, q);
    eq(hbc + ct, hd + b, "h_bc + c~ = h_d + b", p, q);

    eq(ha + hbc, hd + hdb + a + f, "h_a + h_bc = h_d + h_dbar + a + f", p, q);
  }

  // Edge inequalities: first and last row/column of the range.
  const IntRange pr = dc.p_range(), qr = dc.q_range();
  if (!pr.empty() && !qr.empty()) {
    for (int q = qr.lo; q <= qr.hi; ++q) {
      le(h(S::h_dbar, pr.lo, q), h(S::h_a, pr.lo, q), "h_dbar <= h_a on first column", pr.lo, q);
      le(h(S::h_bc, pr.lo, q), h(S::h_d, pr.lo, q), "h_bc <= h_d on first column", pr.lo, q);
      le(h(S::h_dbar, pr.hi, q), h(S::h_bc, pr.hi, q), "h_dbar <= h_bc on last column", pr.hi, q);
      le(h(S::h_a, pr.hi, q), h(S::h_d, pr.hi, q), "h_a <= h_d on last column", pr.hi, q);
    }
    for (int p = pr.lo; p <= pr.hi; ++p) {
      le(h(S::h_bc, p, qr.lo), h(S::h_dbar, p, qr.lo), "h_bc <= h_dbar on first row", p, qr.lo);
      le(h(S::h_d, p, qr.lo), h(S::h_a, p, qr.lo), "h_d <= h_a on first row", p, qr.lo);
      le(h(S::h_d, p, qr.hi), h(S::h_bc, p, qr.hi), "h_d <= h_bc on last row", p, qr.hi);
      le(h(S::h_a, p, qr.hi), h(S::h_dbar, p, qr.hi), "h_a <= h_dbar on last row", p, qr.hi);
    }
  }

  // Frolicher.
  const TotalComplex& tc = eng.total();
  for (int k = tc.k_range.lo; k <= tc.k_range.hi; ++k) {
    std::size_t sdb = 0, sd = 0;
    for (auto [p, q] : dc.bidegrees())
      if (p + q == k) {
        sdb += h(S::h_dbar, p, q);
        sd += h(S::h_d, p, q);
      }
    const std::size_t bk = eng.betti(k);
    rep.expect(bk <= sdb, "b_k <= sum h_dbar", "k=" + std::to_string(k), eq_detail(bk, sdb));
    rep.expect(bk <= sd, "b_k <= sum h_d", "k=" + std::to_string(k), eq_detail(bk, sd));
  }

  if (dc.real) {
    auto rv = validate_real_structure(dc);
    std::string detail;
    for (const auto& v : rv) detail += (detail.empty() ? "" : "; ") + v.to_string();
    rep.expect(rv.empty(), "real structure axioms", "all", detail);
    for (auto [p, q] : dc.bidegrees()) {
      eq(h(S::h_dbar, p, q), h(S::h_d, q, p), "conjugation h_dbar(p,q) = h_d(q,p)", p, q);
      eq(h(S::h_bc, p, q), h(S::h_bc, q, p), "conjugation h_bc symmetric", p, q);
      eq(h(S::h_a, p, q), h(S::h_a, q, p), "conjugation h_a symmetric", p, q);
      eq(h(S::a, p, q), h(S::a, q, p), "conjugation a symmetric", p, q);
      eq(h(S::f, p, q), h(S::f, q, p), "conjugation f symmetric", p, q);
      eq(h(S::b, p, q), h(S::d, q, p), "conjugation b(p,q) = d(q,p)", p, q);
      eq(h(S::c, p, q), h(S::e, q, p), "conjugation c(p,q) = e(q,p)", p, q);
      eq(h(S::b_tilde, p, q), h(S::d_tilde, q, p), "conjugation b~(p,q) = d~(q,p)", p, q);
      eq(h(S::c_tilde, p, q), h(S::e_tilde, q, p), "conjugation c~(p,q) = e~(q,p)", p, q);
    }
  }
  return rep;
}

bool geometric_inputs(const DoubleComplex& dc) { return dc.flags.is_lie_model && dc.flags.unimodular; }

SuiteReport geometric_suite(const CohomologyEngine& eng, const LieModel* model) {
  if (!model) throw GateViolation("manifold-only checks need a Lie-algebra model; abstract complexes are refused");
  if (!geometric_inputs(eng.complex()) || !model->unimodular())
    throw GateViolation("manifold-only checks need a unimodular model; this one is not");

  SuiteReport rep;
  rep.name = "geometric";
  const int n = model->n();
  auto h = [&](Space s, int p, int q) { return eng.dim(s, p, q); };
  using S = Space;

  for (auto [s, p, q] : std::initializer_list<std::tuple<Space, int, int>>{
           {S::h_dbar, n, n}, {S::h_dbar, 0, 0}, {S::h_d, n, n}, {S::h_d, 0, 0},
           {S::h_bc, n, n}, {S::h_a, n, n}, {S::h_bc, 0, 0}, {S::h_a, 0, 0}})
    rep.expect(h(s, p, q) == 1, std::string(key(s)) + " is one-dimensional", at_string(p, q),
               std::to_string(h(s, p, q)));

  std::vector<std::tuple<Space, int, int>> zeros{
      {S::c, 0, 0}, {S::e, 0, 0}, {S::f, 0, 0}, {S::b, 1, 0}, {S::d, 0, 1},
      {S::a, n, n}, {S::b, n, n}, {S::d, n, n}, {S::c, n, n - 1}, {S::e, n - 1, n}};
  for (int p = 0; p <= n; ++p)
    for (auto [s, pp, qq] : std::initializer_list<std::tuple<Space, int, int>>{
             {S::a, p, 0}, {S::d, p, 0}, {S::a, 0, p}, {S::b, 0, p},
             {S::f, p, n}, {S::c, p, n}, {S::e, n, p}, {S::f, n, p}})
      zeros.emplace_back(s, pp, qq);
  for (auto [s, p, q] : zeros)
    rep.expect(h(s, p, q) == 0, std::string(key(s)) + " vanishes", at_string(p, q), std::to_string(h(s, p, q)));

  // Degrees 1 and 2n-1: small <= Dolbeault/conjugate <= large, two chains each.
  auto chain = [&](int p, int q, Space lo, Space hi) {
    for (Space mid : {S::h_dbar, S::h_d}) {
      rep.expect(h(lo, p, q) <= h(mid, p, q), std::string(key(lo)) + " <= " + key(mid), at_string(p, q),
                 eq_detail(h(lo, p, q), h(mid, p, q)));
      rep.expect(h(mid, p, q) <= h(hi, p, q), std::string(key(mid)) + " <= " + key(hi), at_string(p, q),
                 eq_detail(h(mid, p, q), h(hi, p, q)));
    }
  };
  chain(1, 0, S::h_bc, S::h_a);
  chain(0, 1, S::h_bc, S::h_a);
  chain(n, n - 1, S::h_a, S::h_bc);
  chain(n - 1, n, S::h_a, S::h_bc);

  // Dualities (zero convention outside [0,n]^2).
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const int pp = n - p, qq = n - q;
      auto dual = [&](Space s, int p1, int q1, Space t, const char* what) {
        rep.expect(h(s, p1, q1) == h(t, pp, qq), what, at_string(p, q), eq_detail(h(s, p1, q1), h(t, pp, qq)));
      };
      dual(S::h_dbar, p, q, S::h_dbar, "h_dbar(p,q) = h_dbar(n-p,n-q)");
      dual(S::h_d, p, q, S::h_d, "h_d(p,q) = h_d(n-p,n-q)");
      dual(S::h_bc, p, q, S::h_a, "h_bc(p,q) = h_a(n-p,n-q)");
      dual(S::d, p, q, S::c, "d(p,q) = c(n-p,n-q)");
      dual(S::b, p, q, S::e, "b(p,q) = e(n-p,n-q)");
      dual(S::a, p, q, S::f, "a(p,q) = f(n-p,n-q)");
      dual(S::b, p + 1, q, S::b, "b(p+1,q) = b(n-p,n-q)");
      dual(S::d, p, q + 1, S::d, "d(p,q+1) = d(n-p,n-q)");
      dual(S::e, p - 1, q, S::e, "e(p-1,q) = e(n-p,n-q)");
      dual(S::c, p, q - 1, S::c, "c(p,q-1) = c(n-p,n-q)");
    }

  // Mild and dual-mild corner cases.
  for (int q = 0; q <= n; ++q) rep.expect(h(S::b, 0, q) == 0, "mild", at_string(0, q));
  rep.expect(h(S::b, 1, 0) == 0, "mild", at_string(1, 0));
  rep.expect(h(S::b, n, n) == 0, "mild", at_string(n, n));
  for (int p = 0; p <= n; ++p) rep.expect(h(S::d, p, 0) == 0, "dual mild", at_string(p, 0));
  rep.expect(h(S::d, 0, 1) == 0, "dual mild", at_string(0, 1));
  rep.expect(h(S::d, n, n) == 0, "dual mild", at_string(n, n));

  // Stokes on the model: no exact form reaches the top monomial.
  const WedgeAlgebra& alg = model->algebra();
  for (Mask m = 0; m < alg.size(); ++m) {
    if (WedgeAlgebra::degree(m) != 2 * n - 1) continue;
    Form dm = model->d(Form::monomial(alg.size(), m));
    rep.expect(model->top_coefficient(dm).is_zero(), "top coefficient of an exact form vanishes",
               "monomial " + std::to_string(m));
  }

  // Wedge pairing H_BC^{p,q} x H_A^{n-p,n-q} -> top coefficient.
  auto forms = [&](const Matrix& cols, int p, int q) {
    std::vector<Form> out;
    for (std::size_t j = 0; j < cols.cols(); ++j) out.push_back(model->from_coordinates(cols.column(j), p, q));
    return out;
  };
  auto pairing = [&](const std::vector<Form>& xs, const std::vector<Form>& ys) {
    Matrix m(xs.size(), ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j) m(i, j) = model->top_coefficient(wedge(xs[i], ys[j]));
    return m;
  };
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const Subquotient& bc = eng.space(S::h_bc, p, q);
      const Subquotient& ae = eng.space(S::h_a, n - p, n - q);
      const auto bc_u = forms(bc.U().basis(), p, q), bc_v = forms(bc.V().basis(), p, q);
      const auto a_u = forms(ae.U().basis(), n - p, n - q), a_v = forms(ae.V().basis(), n - p, n - q);
      rep.expect(pairing(bc_v, a_u).is_zero(), "pairing vanishes on exact Bott-Chern forms", at_string(p, q));
      rep.expect(pairing(bc_u, a_v).is_zero(), "pairing vanishes on Aeppli-exact forms", at_string(p, q));
      Matrix pm = pairing(forms(bc.reps(), p, q), forms(ae.reps(), n - p, n - q));
      const bool ok = pm.rows() == pm.cols() && rank(pm) == pm.rows();
      rep.expect(ok, "pairing H_bc x H_a(n-p,n-q) nondegenerate", at_string(p, q),
                 std::to_string(pm.rows()) + "x" + std::to_string(pm.cols()) + ", rank " + std::to_string(rank(pm)));
    }
  return rep;
}

}  // namespace ddlab
