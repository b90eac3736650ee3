#pragma once

#include "ddlab/cohomology.hpp"

#include <string>
#include <vector>

namespace ddlab {

class LieModel;

struct CheckFailure {
  std::string check;
  std::string where;
  std::string detail;
  std::string to_string() const;
};

/// Tally of a batch of exact checks; failures carry enough to reproduce.
struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
  /// Counts the check and records a failure when `cond` is false.
  bool expect(bool cond, std::string check, std::string where, std::string detail = {});
  void merge(const SuiteReport& other);
};

std::string at_string(int p, int q);

/// Nodes of the exact sequences numbered 1..8:
///   1  A -> B -> H_dbar -> H_A -> C        5  B~ -> H_dbar -> H_A -> C
///   2  D -> H_BC -> H_dbar -> E -> F       6  D -> H_BC -> H_dbar -> E~
///   3  A -> D -> H_d -> H_A -> E           7  D~ -> H_d -> H_A -> E
///   4  B -> H_BC -> H_d -> C -> F          8  B -> H_BC -> H_d -> C~
/// each framed by zeros, all arrows induced by the identity.
const std::vector<Space>& sequence_nodes(int which);

struct SequenceReport {
  int which = 0;
  Bidegree at;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;  // of the arrows between consecutive nodes
  std::vector<std::string> failures;
  bool exact() const { return failures.empty(); }
};

/// Realizes every arrow as an InducedMap and checks kernel = image as
/// subspaces at each interior node, injectivity and surjectivity at the ends.
SequenceReport verify_sequence(const CohomologyEngine& eng, int which, int p, int q);

/// delbar: C^{p,q} -> D^{p,q+1} and del: E^{p,q} -> B^{p+1,q} are bijective.
SuiteReport isomorphism_suite(const CohomologyEngine& eng);

/// All eight sequences at every bidegree of the range, plus the two
/// isomorphisms above.
SuiteReport sequence_suite(const CohomologyEngine& eng);

/// Dimension identities that hold on every double complex: the tilde
/// relations, the inequalities bounding b, d, c, e, the two rank identities
/// relating H_A, H_BC, H_d, H_dbar, the edge inequalities at the range
/// boundary, the Frolicher bounds, and conjugation symmetries when a real
/// structure is present.
SuiteReport identity_suite(const CohomologyEngine& eng);

/// Whether the manifold-only checks may run: a unimodular Lie model.
bool geometric_inputs(const DoubleComplex& dc);

/// Manifold-only checks: one-dimensional and vanishing lists at the corners
/// and edges, the sixteen inequalities in degrees 1 and 2n-1, Serre-type
/// dualities, the mild/dual-mild corner cases, and nondegeneracy of the
/// top-degree wedge pairing H_BC^{p,q} x H_A^{n-p,n-q}.
/// Throws GateViolation when `model` is null or not unimodular.
SuiteReport geometric_suite(const CohomologyEngine& eng, const LieModel* model);

}  // namespace ddlab
