#include "ddlab/lie/lie_model.hpp"
#include "ddlab/random_complex.hpp"
#include "ddlab/suites.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace ddlab;
using namespace ddlab::test;

namespace {

std::string slurp(const std::filesystem::path& f) {
  std::ifstream in(f, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_ok(const SuiteReport& s) {
  INFO(s.name << ": " << s.failures.size() << " failures of " << s.checks);
  for (const auto& f : s.failures) UNSCOPED_INFO(f.to_string());
  CHECK(s.ok());
  CHECK(s.checks > 0);
}

}  // namespace

TEST_CASE("subquotients") {
  const Subspace full = Subspace::full(3);
  const Subspace line = image(Matrix::from_rows({{Scalar(1)}, {Scalar(0)}, {Scalar(0)}}, 1));
  const Subquotient q({0, 0}, full, line);
  CHECK(q.dim() == 2);
  CHECK(is_zero(q.class_of({Scalar(5), Scalar(0), Scalar(0)})));
  CHECK(q.class_map() * q.reps() == Matrix::identity(2));
  CHECK_THROWS_AS(Subquotient({0, 0}, line, full), TheoremViolation);
  CHECK_THROWS_AS(Subquotient({0, 0}, line, Subspace::zero(3)).class_of({Scalar(0), Scalar(1), Scalar(0)}),
                  std::invalid_argument);
}

TEST_CASE("Iwasawa values") {
  const CohomologyEngine eng(corpus_complex("iwasawa.se"));
  CHECK(eng.dim(Space::h_dbar, 1, 0) == 3);
  CHECK(eng.dim(Space::h_bc, 1, 0) == 2);
  CHECK(eng.dim(Space::h_d, 1, 0) == 2);
  CHECK(eng.dim(Space::b, 2, 3) == 1);
  CHECK(eng.dim(Space::a, 2, 3) == 0);
  CHECK(eng.dim(Space::d, 2, 3) == 0);
  const std::vector<std::size_t> betti{1, 4, 8, 10, 8, 4, 1};
  for (int k = 0; k <= 6; ++k) CHECK(eng.betti(k) == betti[k]);

  // The identity of E^{1,0} does not induce H_dbar -> H_BC: phi3 is delbar-closed, not del-closed.
  CHECK_THROWS_AS(identity_induced(eng.space(Space::h_dbar, 1, 0), eng.space(Space::h_bc, 1, 0)), IllDefinedMap);
  const InducedMap i = identity_induced(eng.space(Space::h_bc, 1, 0), eng.space(Space::h_dbar, 1, 0));
  CHECK(i.injective());
  CHECK(i.rank() == 2);
}

TEST_CASE("small abstract complexes") {
  const InvariantTable sq = invariant_table(square());
  for (auto [pq, nums] : sq.at)
    for (Space s : kAllSpaces) CHECK(nums[s] == 0);

  const CohomologyEngine z(horizontal_zigzag());
  CHECK(z.dim(Space::h_dbar, 0, 0) == 1);
  CHECK(z.dim(Space::h_dbar, 1, 0) == 1);
  CHECK(z.dim(Space::h_d, 0, 0) == 0);
  CHECK(z.dim(Space::b, 1, 0) == 1);
  CHECK(z.dim(Space::e, 0, 0) == 1);
  CHECK(z.dim(Space::h_bc, 1, 0) == 1);
  CHECK(z.dim(Space::h_a, 0, 0) == 1);
  CHECK(z.betti(0) == 0);
  CHECK(z.betti(1) == 0);

  const CohomologyEngine d(dot());
  for (Space s : {Space::h_dbar, Space::h_d, Space::h_bc, Space::h_a}) CHECK(d.dim(s, 0, 0) == 1);
  for (Space s : {Space::a, Space::b, Space::c, Space::d, Space::e, Space::f}) CHECK(d.dim(s, 0, 0) == 0);
}

TEST_CASE("committed fixtures reproduce") {
  for (const CorpusEntry& e : read_manifest(corpus_dir())) {
    INFO(e.name);
    const InvariantTable t = invariant_table(corpus_complex(e.file, e.params));
    const auto drift = fixture_drift(t, slurp(corpus_dir() / "fixtures" / (e.name + ".json")));
    for (const auto& d : drift) UNSCOPED_INFO(d);
    CHECK(drift.empty());
  }
}

TEST_CASE("fixture drift is reported") {
  const InvariantTable t = invariant_table(corpus_complex("torus1.se"));
  const InvariantTable other = invariant_table(corpus_complex("torus2.se"));
  CHECK(fixture_drift(t, fixture_json("torus1", t)).empty());
  CHECK_FALSE(fixture_drift(t, fixture_json("torus1", other)).empty());
  CHECK(fixture_drift(t, "not json").size() == 1);
}

TEST_CASE("exact sequences") {
  for (const char* f : {"iwasawa.se", "kodaira_thurston.se", "affine2.se"}) {
    INFO(f);
    const CohomologyEngine eng(corpus_complex(f));
    for (int which = 1; which <= 8; ++which)
      for (auto [p, q] : eng.complex().bidegrees()) {
        const SequenceReport r = verify_sequence(eng, which, p, q);
        INFO("sequence " << which << " at " << at_string(p, q));
        for (const auto& x : r.failures) UNSCOPED_INFO(x);
        CHECK(r.exact());
        CHECK(r.dims.size() == sequence_nodes(which).size());
      }
  }
  const CohomologyEngine z(horizontal_zigzag());
  const SequenceReport r = verify_sequence(z, 1, 1, 0);  // A -> B -> H_dbar -> H_A -> C
  CHECK(r.dims == std::vector<std::size_t>{0, 1, 1, 0, 0});
  CHECK(r.ranks == std::vector<std::size_t>{0, 1, 0, 0});
}

TEST_CASE("algebraic suites on random complexes") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const CohomologyEngine eng(random_complex(seed, 18));
    require_ok(sequence_suite(eng));
    require_ok(identity_suite(eng));
  }
  require_ok(identity_suite(CohomologyEngine(corpus_complex("sl2c.se"))));
}

TEST_CASE("geometric suite and its gate") {
  for (const char* f : {"torus1.se", "torus2.se", "torus3.se", "iwasawa.se", "kodaira_thurston.se", "sl2c.se"}) {
    INFO(f);
    const LoadedInput in = corpus_input(f);
    REQUIRE(geometric_inputs(in.complex));
    require_ok(geometric_suite(CohomologyEngine(in.complex), in.model.get()));
  }
  const LoadedInput aff = corpus_input("affine2.se");
  CHECK_FALSE(geometric_inputs(aff.complex));
  CHECK_THROWS_AS(geometric_suite(CohomologyEngine(aff.complex), aff.model.get()), GateViolation);

  const LoadedInput sq = corpus_input("square.dcx");
  CHECK_FALSE(geometric_inputs(sq.complex));
  CHECK_THROWS_AS(geometric_suite(CohomologyEngine(sq.complex), nullptr), GateViolation);
}

TEST_CASE("top-degree pairing on the torus") {
  // H_BC^{1,0} x H_A^{1,2} on a complex 2-torus: phi_i ^ phi_j^phibar1^phibar2 is the 2x2 antidiagonal.
  const LoadedInput in = corpus_input("torus2.se");
  const LieModel& m = *in.model;
  const CohomologyEngine eng(in.complex);
  const Subquotient& bc = eng.space(Space::h_bc, 1, 0);
  const Subquotient& a = eng.space(Space::h_a, 1, 2);
  REQUIRE(bc.dim() == 2);
  REQUIRE(a.dim() == 2);
  Matrix pairing(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      pairing(i, j) = m.top_coefficient(
          m.wedge(m.from_coordinates(bc.reps().column(i), 1, 0), m.from_coordinates(a.reps().column(j), 1, 2)));
  CHECK(rank(pairing) == 2);
}
