#include "ddlab/lemma_lab.hpp"

#include "ddlab/errors.hpp"
#include "ddlab/lie/lie_model.hpp"

namespace ddlab {

namespace {

using S = Space;

// Image under delbar of Ker del at (p, q-1), inside E^{p,q}.
Subspace dbar_of_ker_del(const CohomologyEngine& eng, int p, int q) {
  return image(eng.complex().delbar(p, q - 1), eng.pieces(p, q - 1).ker_del);
}

std::string yn(bool b) { return b ? "true" : "false"; }

}  // namespace

BidegreeFlags classify_bidegree(const CohomologyEngine& eng, int p, int q) {
  BidegreeFlags f;
  f.mild = eng.dim(S::b, p, q) == 0;
  f.dual_mild = eng.dim(S::d, p, q) == 0;
  f.tilde_mild = eng.dim(S::b_tilde, p, q) == 0;
  f.tilde_dual_mild = eng.dim(S::d_tilde, p, q) == 0;
  f.weak = eng.dim(S::a, p, q) == 0;
  f.strong = f.mild && f.dual_mild;
  const auto& x = eng.pieces(p, q);
  f.script_D = dbar_of_ker_del(eng, p, q).contains(subspace_intersect(x.im_del, x.ker_dbar));
  return f;
}

SuiteReport flag_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "flags";
  const DoubleComplex& dc = eng.complex();
  for (auto [p, q] : dc.bidegrees()) {
    const std::string at = at_string(p, q);
    const BidegreeFlags f = classify_bidegree(eng, p, q);
    const auto& x = eng.pieces(p, q);
    auto same = [&](bool l, bool r, const char* what) { rep.expect(l == r, what, at, yn(l) + " vs " + yn(r)); };
    auto imp = [&](bool l, bool r, const char* what) { rep.expect(!l || r, what, at); };

    const auto& bc = eng.space(S::h_bc, p, q);
    const auto& hd = eng.space(S::h_d, p, q);
    const auto& hdb = eng.space(S::h_dbar, p, q);
    const auto& ha = eng.space(S::h_a, p, q);
    try {
      const InducedMap f_d = identity_induced(bc, hd), f_db = identity_induced(bc, hdb);
      const InducedMap g_d = identity_induced(hd, ha), g_db = identity_induced(hdb, ha);
      const InducedMap i_ba = identity_induced(bc, ha);
      same(f_d.injective(), f.mild, "f_del injective <=> mild");
      same(f_db.injective(), f.dual_mild, "f_dbar injective <=> dual mild");
      same(g_db.injective(), f.tilde_mild, "g_dbar injective <=> tilde mild");
      same(g_d.injective(), f.tilde_dual_mild, "g_del injective <=> tilde dual mild");
      same(i_ba.injective(), f.strong, "H_BC -> H_A injective <=> strong");
      same(f_d.surjective(), eng.dim(S::c_tilde, p, q) == 0, "f_del surjective <=> c~ = 0");
      same(f_db.surjective(), eng.dim(S::e_tilde, p, q) == 0, "f_dbar surjective <=> e~ = 0");
      same(g_d.surjective(), eng.dim(S::e, p, q) == 0, "g_del surjective <=> e = 0");
      same(g_db.surjective(), eng.dim(S::c, p, q) == 0, "g_dbar surjective <=> c = 0");
    } catch (const IllDefinedMap& e) {
      rep.expect(false, "comparison maps well-defined", at, e.what());
    }

    // Form-level statements.
    const Subspace del_of_kerddbar = image(dc.del(p - 1, q), eng.pieces(p - 1, q).ker_ddbar);
    const Subspace dbar_of_kerddbar = image(dc.delbar(p, q - 1), eng.pieces(p, q - 1).ker_ddbar);
    same(x.im_ddbar.contains(del_of_kerddbar), f.mild, "del(Ker ddbar) in Im ddbar <=> mild");
    same(x.im_ddbar.contains(dbar_of_kerddbar), f.dual_mild, "delbar(Ker ddbar) in Im ddbar <=> dual mild");
    same(x.im_dbar.contains(subspace_intersect(x.im_del, x.ker_dbar)), f.tilde_mild,
         "Im del ∩ Ker delbar in Im delbar <=> tilde mild");
    same(x.im_del.contains(subspace_intersect(x.ker_del, x.im_dbar)), f.tilde_dual_mild,
         "Ker del ∩ Im delbar in Im del <=> tilde dual mild");
    same(x.im_ddbar.contains(subspace_intersect(x.im_del, x.im_dbar)), f.weak, "Im del ∩ Im delbar in Im ddbar <=> weak");
    const Subspace closed = subspace_intersect(x.ker_del, x.ker_dbar);
    same(x.im_ddbar.contains(subspace_intersect(closed, subspace_sum(x.im_del, x.im_dbar))), f.strong,
         "closed boundaries in Im ddbar <=> strong");

    imp(f.mild, f.weak, "mild => weak");
    imp(f.mild, f.tilde_mild, "mild => tilde mild");
    imp(f.dual_mild, f.weak, "dual mild => weak");
    imp(f.dual_mild, f.tilde_dual_mild, "dual mild => tilde dual mild");
    imp(f.mild, f.script_D, "mild => script D");
    imp(f.script_D, f.tilde_mild, "script D => tilde mild");

    if (dc.real) {
      const BidegreeFlags g = classify_bidegree(eng, q, p);
      same(f.strong, f.mild && g.mild, "strong <=> mild at (p,q) and (q,p)");
      same(f.strong, f.dual_mild && g.dual_mild, "strong <=> dual mild at (p,q) and (q,p)");
    }
  }
  return rep;
}

bool h_condition(const CohomologyEngine& eng, int p, int k) { return eng.dim(S::b_tilde, p + k, p - k + 1) == 0; }
bool h_tilde_condition(const CohomologyEngine& eng, int p, int k) { return eng.dim(S::b, p + k, p - k + 1) == 0; }

RegularityReport regularity(const CohomologyEngine& eng) {
  RegularityReport r{true, true, true, true, false};
  for (auto [p, q] : eng.complex().bidegrees()) {
    r.e_zero = r.e_zero && eng.dim(S::e, p, q) == 0;
    r.c_zero = r.c_zero && eng.dim(S::c, p, q) == 0;
    r.b_zero = r.b_zero && eng.dim(S::b, p, q) == 0;
    r.d_zero = r.d_zero && eng.dim(S::d, p, q) == 0;
  }
  r.regular = r.b_zero && r.d_zero;
  return r;
}

SuiteReport regularity_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "regularity";
  const RegularityReport r = regularity(eng);
  rep.expect(r.e_zero == r.b_zero, "all e vanish <=> all b vanish", "all", yn(r.e_zero) + " vs " + yn(r.b_zero));
  rep.expect(r.c_zero == r.d_zero, "all c vanish <=> all d vanish", "all", yn(r.c_zero) + " vs " + yn(r.d_zero));
  if (eng.complex().real)
    rep.expect(r.b_zero == r.d_zero, "all b vanish <=> all d vanish", "all", yn(r.b_zero) + " vs " + yn(r.d_zero));
  return rep;
}

DegreeFlags dgms_degree(const CohomologyEngine& eng, int k) {
  const TotalComplex& tc = eng.total();
  DegreeFlags f;
  f.k = k;

  // In E^k.
  {
    const Subspace ker1 = kernel(tc.dprime_at(k)), ker2 = kernel(tc.dsecond_at(k));
    const Subspace im1 = image(tc.dprime_at(k - 1)), im2 = image(tc.dsecond_at(k - 1));
    const Subspace imd = image(tc.d_at(k - 1));
    const Subspace im12 = image(tc.dprime_at(k - 1) * tc.dsecond_at(k - 2));
    const Subspace closed = subspace_intersect(ker1, ker2);
    f.a = subspace_intersect(closed, imd) == im12;
    f.b = subspace_intersect(ker2, im1) == im12 && subspace_intersect(ker1, im2) == im12;
    f.c = subspace_intersect(closed, subspace_sum(im1, im2)) == im12;
  }
  // In E^{k-1}.
  {
    const int j = k - 1;
    const Subspace ker1 = kernel(tc.dprime_at(j)), ker2 = kernel(tc.dsecond_at(j));
    const Subspace im1 = image(tc.dprime_at(j - 1)), im2 = image(tc.dsecond_at(j - 1));
    const Subspace kerd = kernel(tc.d_at(j));
    const Subspace ker12 = kernel(tc.dprime_at(j + 1) * tc.dsecond_at(j));
    const Subspace bound = subspace_sum(im1, im2);
    f.a_star = subspace_sum(bound, kerd) == ker12;
    f.b_star = subspace_sum(ker1, im2) == ker12 && subspace_sum(ker2, im1) == ker12;
    f.c_star = subspace_sum(bound, subspace_intersect(ker1, ker2)) == ker12;
  }
  return f;
}

std::vector<DegreeFlags> dgms_all(const CohomologyEngine& eng) {
  std::vector<DegreeFlags> out;
  const IntRange kr = eng.total().k_range;
  for (int k = kr.lo; k <= kr.hi; ++k) out.push_back(dgms_degree(eng, k));
  return out;
}

SuiteReport dgms_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "dgms";
  bool all = true;
  for (const DegreeFlags& f : dgms_all(eng)) {
    rep.expect(f.agree(), "six DGMS conditions agree", "k=" + std::to_string(f.k),
               "a=" + yn(f.a) + " b=" + yn(f.b) + " c=" + yn(f.c) + " a*=" + yn(f.a_star) + " b*=" + yn(f.b_star) +
                   " c*=" + yn(f.c_star));
    all = all && f.b;
  }
  const bool reg = regularity(eng).regular;
  rep.expect(all == reg, "ddbar-lemma in every degree <=> regular", "all", yn(all) + " vs " + yn(reg));
  return rep;
}

ConeMapReport cone_maps(const CohomologyEngine& eng, int p) {
  ConeMapReport r;
  r.p = p;
  r.a = eng.dim(S::a, p + 1, p);
  r.b = eng.dim(S::b, p + 1, p);
  r.b_tilde = eng.dim(S::b_tilde, p + 1, p);
  const Matrix del = eng.complex().del(p, p);
  const auto& ha = eng.space(S::h_a, p, p);
  const auto& hdb = eng.space(S::h_dbar, p + 1, p);
  const auto& hbc = eng.space(S::h_bc, p + 1, p);
  InducedMap f;
  try {
    r.T = induced_map(ha, hdb, del);
    r.W = induced_map(ha, hbc, del);
    f = identity_induced(hbc, hdb);
  } catch (const IllDefinedMap& e) {
    r.error = e.what();
    return r;
  }
  r.rank_T = r.T.rank();
  r.rank_W = r.W.rank();
  const Subspace kT = r.T.kernel(), kW = r.W.kernel();
  r.ker_T = kT.dim();
  r.ker_W = kW.dim();
  r.T_zero = r.rank_T == 0;
  r.W_zero = r.rank_W == 0;
  r.kernels_equal = kT == kW;
  r.eq_T_btilde = r.T_zero == (r.b_tilde == 0);
  r.eq_kernels_a = r.kernels_equal == (r.a == 0);
  r.eq_W_b = r.W_zero == (r.b == 0);
  r.ranks_ok = r.rank_T == r.b_tilde && r.rank_W == r.b && r.ker_T >= r.ker_W && r.ker_T - r.ker_W == r.a;
  r.factorization_ok = r.T.matrix == f.matrix * r.W.matrix;
  return r;
}

std::vector<int> cone_map_degrees(const CohomologyEngine& eng) {
  const DoubleComplex& dc = eng.complex();
  std::vector<int> out;
  if (dc.flags.is_lie_model) {
    for (int p = 1; p <= dc.n() - 1; ++p) out.push_back(p);
  } else {
    for (int p = dc.p_range().lo; p <= dc.p_range().hi; ++p)
      if (dc.in_range(p, p)) out.push_back(p);
  }
  return out;
}

SuiteReport cone_map_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "cone maps";
  const bool reg = regularity(eng).regular;
  for (int p : cone_map_degrees(eng)) {
    const ConeMapReport r = cone_maps(eng, p);
    const std::string at = "p=" + std::to_string(p);
    if (!rep.expect(r.error.empty(), "T and W well-defined", at, r.error)) continue;
    rep.expect(r.eq_T_btilde, "T = 0 <=> b~(p+1,p) = 0", at);
    rep.expect(r.eq_kernels_a, "Ker T = Ker W <=> a(p+1,p) = 0", at);
    rep.expect(r.eq_W_b, "W = 0 <=> b(p+1,p) = 0", at);
    rep.expect(r.ranks_ok, "rank T = b~, rank W = b, Ker T / Ker W = a", at,
               "rank T " + std::to_string(r.rank_T) + ", rank W " + std::to_string(r.rank_W) + ", b~ " +
                   std::to_string(r.b_tilde) + ", b " + std::to_string(r.b) + ", a " + std::to_string(r.a));
    rep.expect(r.factorization_ok, "T = f_dbar o W", at);
    if (reg) rep.expect(r.T_zero && r.W_zero, "regular => T = 0 and W = 0", at);
  }
  return rep;
}

NamedCriteria named_criteria(const CohomologyEngine& eng) {
  NamedCriteria out;
  const DoubleComplex& dc = eng.complex();
  const int n = dc.n();
  if (n >= 1) {
    SggReport s;
    s.n = n;
    s.via_b_tilde = eng.dim(S::b_tilde, n, n - 1) == 0;
    s.via_T = cone_maps(eng, n - 1).T_zero;
    if (geometric_inputs(dc)) s.via_h01 = eng.dim(S::h_bc, 0, 1) == eng.dim(S::h_dbar, 0, 1);
    out.sgg = s;
  }
  if (n == 2 && geometric_inputs(dc)) {
    SurfaceReport s;
    s.h21_a_eq_dbar = eng.dim(S::h_a, 2, 1) == eng.dim(S::h_dbar, 2, 1);
    s.b_tilde21_zero = eng.dim(S::b_tilde, 2, 1) == 0;
    s.all_abcdef_zero = true;
    for (auto [p, q] : dc.bidegrees())
      for (Space x : {S::a, S::b, S::c, S::d, S::e, S::f}) s.all_abcdef_zero = s.all_abcdef_zero && eng.dim(x, p, q) == 0;
    out.surface = s;
  }
  return out;
}

SuiteReport named_criteria_suite(const CohomologyEngine& eng) {
  SuiteReport rep;
  rep.name = "named criteria";
  const NamedCriteria nc = named_criteria(eng);
  if (nc.sgg) {
    const SggReport& s = *nc.sgg;
    rep.expect(s.consistent(), "sGG characterizations agree", "n=" + std::to_string(s.n),
               "b~=" + yn(s.via_b_tilde) + " T=" + yn(s.via_T) + (s.via_h01 ? " h01=" + yn(*s.via_h01) : ""));
  }
  if (nc.surface) {
    const SurfaceReport& s = *nc.surface;
    rep.expect(s.consistent(), "surface conditions agree", "n=2",
               "h21=" + yn(s.h21_a_eq_dbar) + " b~21=" + yn(s.b_tilde21_zero) + " abcdef=" + yn(s.all_abcdef_zero));
  }
  return rep;
}

Sl2cReport example_sl2c(const LieModel& m) {
  const Form al = m.letter("alpha"), be = m.letter("beta"), et = m.letter("eta");
  const Form alb = m.conj(al), beb = m.conj(be), etb = m.conj(et);
  const Scalar half_i(Rational(0), Rational(1, 2));
  const Form omega = half_i * (m.wedge(al, alb) + m.wedge(be, beb) + m.wedge(et, etb));
  const Form omega2 = m.wedge(omega, omega);
  const Form prim = Scalar(Rational(1, 16)) * m.wedge(al, m.d(alb)) + Scalar(Rational(1, 16)) * m.wedge(be, m.d(beb)) +
                    Scalar(Rational(1, 4)) * m.wedge(et, m.d(etb));
  const Form dprim = m.d(prim);

  auto pure_degree = [&](const Form& x, int deg) {
    bool any = false;
    for (Mask k = 0; k < x.size(); ++k) {
      if (x[k].is_zero()) continue;
      if (WedgeAlgebra::degree(k) != deg) return false;
      any = true;
    }
    return any;
  };

  Sl2cReport r;
  r.d_omega2_zero = m.d(omega2).is_zero();
  r.omega2_eq_d_primitive = omega2 == dprim;
  r.primitive_degree_3 = pure_degree(prim, 3);
  r.omega2_degree_4 = pure_degree(omega2, 4);
  r.omega2_eq_2_d_primitive = omega2 == Scalar(2) * dprim;
  r.omega3_top_nonzero = !m.top_coefficient(m.wedge(omega2, omega)).is_zero();

  // Exactness of omega^2 decided independently of the primitive.
  const WedgeAlgebra& alg = m.algebra();
  std::vector<Vector> cols;
  for (Mask k = 0; k < alg.size(); ++k) {
    if (WedgeAlgebra::degree(k) != 3) continue;
    const Form dk = m.d(Form::monomial(alg.size(), k));
    Vector v(alg.size());
    for (Mask j = 0; j < alg.size(); ++j) v[j] = dk[j];
    cols.push_back(std::move(v));
  }
  Vector target(alg.size());
  for (Mask j = 0; j < alg.size(); ++j) target[j] = omega2[j];
  r.omega2_exact = lift(Matrix::from_columns(alg.size(), cols), target).has_value();
  return r;
}

}  // namespace ddlab
