#pragma once

#include "ddlab/cohomology.hpp"
#include "ddlab/suites.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ddlab {

class LieModel;

/// Weak forms of the ddbar-lemma at one bidegree.
struct BidegreeFlags {
  bool mild = false;             // b = 0
  bool dual_mild = false;        // d = 0
  bool tilde_mild = false;       // b~ = 0
  bool tilde_dual_mild = false;  // d~ = 0
  bool weak = false;             // a = 0
  bool strong = false;           // b = d = 0
  bool script_D = false;         // Im del ∩ Ker delbar ⊆ delbar(Ker del)
  friend bool operator==(const BidegreeFlags&, const BidegreeFlags&) = default;
};

BidegreeFlags classify_bidegree(const CohomologyEngine& eng, int p, int q);

/// Each flag against its other characterizations: injectivity of the
/// comparison maps H_BC -> H_d, H_BC -> H_dbar, H_dbar -> H_A, H_d -> H_A,
/// H_BC -> H_A, the form-level containments, and the implications between
/// flags. With a real structure, also strong(p,q) <=> mild at (p,q),(q,p)
/// <=> dual-mild at (p,q),(q,p).
SuiteReport flag_suite(const CohomologyEngine& eng);

/// For fixed p, the conditions b~^{p+k,p-k+1} = 0 (plain) and
/// b^{p+k,p-k+1} = 0 (tilde) from the balanced-cone literature.
bool h_condition(const CohomologyEngine& eng, int p, int k);
bool h_tilde_condition(const CohomologyEngine& eng, int p, int k);

struct RegularityReport {
  bool e_zero = false, c_zero = false, b_zero = false, d_zero = false;
  /// No b and no d anywhere: the common verdict when all four agree.
  bool regular = false;
};

/// e and b vanish together, and c and d, on any complex. All four agree when
/// a real structure exists; the suite asserts that only then.
RegularityReport regularity(const CohomologyEngine& eng);
SuiteReport regularity_suite(const CohomologyEngine& eng);

/// DGMS conditions in total degree k (a_k, b_k, c_k in E^k and the starred
/// ones in E^{k-1}), evaluated as subspace equalities of the total complex.
struct DegreeFlags {
  int k = 0;
  bool a = false, b = false, c = false;
  bool a_star = false, b_star = false, c_star = false;
  bool agree() const { return a == b && b == c && c == a_star && a_star == b_star && b_star == c_star; }
};

DegreeFlags dgms_degree(const CohomologyEngine& eng, int k);
std::vector<DegreeFlags> dgms_all(const CohomologyEngine& eng);

/// Six-way agreement in every degree, and the conjunction over k equal to
/// the regularity verdict.
SuiteReport dgms_suite(const CohomologyEngine& eng);

/// T: H_A^{p,p} -> H_dbar^{p+1,p} and W: H_A^{p,p} -> H_BC^{p+1,p}, both
/// induced by del.
struct ConeMapReport {
  int p = 0;
  InducedMap T, W;
  std::size_t rank_T = 0, rank_W = 0, ker_T = 0, ker_W = 0;
  std::size_t a = 0, b = 0, b_tilde = 0;  // at (p+1,p)
  bool T_zero = false, W_zero = false, kernels_equal = false;
  bool eq_T_btilde = false;       // T = 0 <=> b~ = 0
  bool eq_kernels_a = false;      // Ker T = Ker W <=> a = 0
  bool eq_W_b = false;            // W = 0 <=> b = 0
  bool ranks_ok = false;          // rank T = b~, rank W = b, dim Ker T - dim Ker W = a
  bool factorization_ok = false;  // T = f_dbar o W
  std::string error;              // ill-defined map, should never happen
  bool ok() const {
    return error.empty() && eq_T_btilde && eq_kernels_a && eq_W_b && ranks_ok && factorization_ok;
  }
};

ConeMapReport cone_maps(const CohomologyEngine& eng, int p);
/// 1..n-1 on Lie models; every p with (p,p) in range otherwise.
std::vector<int> cone_map_degrees(const CohomologyEngine& eng);
SuiteReport cone_map_suite(const CohomologyEngine& eng);

struct SggReport {
  int n = 0;
  bool via_b_tilde = false;           // b~^{n,n-1} = 0
  std::optional<bool> via_h01;        // h_bc^{0,1} = h_dbar^{0,1}, geometric inputs only
  bool via_T = false;                 // T^{n-1,n-1} = 0
  bool consistent() const { return via_b_tilde == via_T && (!via_h01 || *via_h01 == via_b_tilde); }
  bool verdict() const { return via_b_tilde; }
};

/// Computable conditions of the surface criterion; Kahler-ness itself is not
/// decided.
struct SurfaceReport {
  bool h21_a_eq_dbar = false;  // h_A^{2,1} = h_dbar^{2,1}
  bool b_tilde21_zero = false;
  bool all_abcdef_zero = false;
  bool consistent() const { return h21_a_eq_dbar == b_tilde21_zero && b_tilde21_zero == all_abcdef_zero; }
};

struct NamedCriteria {
  std::optional<SggReport> sgg;          // when n >= 1
  std::optional<SurfaceReport> surface;  // geometric inputs with n = 2
};

NamedCriteria named_criteria(const CohomologyEngine& eng);
SuiteReport named_criteria_suite(const CohomologyEngine& eng);

/// The SL(2,C) computation with omega = (i/2)(a^abar + b^bbar + e^ebar)
/// and primitive 1/16 a^d(abar) + 1/16 b^d(bbar) + 1/4 e^d(ebar).
struct Sl2cReport {
  bool d_omega2_zero = false;
  bool omega2_eq_d_primitive = false;
  bool primitive_degree_3 = false;
  bool omega2_degree_4 = false;
  bool omega2_eq_2_d_primitive = false;
  bool omega2_exact = false;
  bool omega3_top_nonzero = false;
  bool ok() const { return d_omega2_zero && omega2_eq_d_primitive && primitive_degree_3 && omega2_degree_4; }
};

/// Needs generators named alpha, beta, eta; throws InputError otherwise.
Sl2cReport example_sl2c(const LieModel& model);

}  // namespace ddlab
