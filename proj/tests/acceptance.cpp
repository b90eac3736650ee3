// Acceptance run: one PASS/FAIL line per criterion, with wall time against its
// limit. Exit status is nonzero on any unexpected outcome. Criterion 3 is a
// known failure of the quoted claim itself (see README); it is reported as
// FAIL and only its expected shape is enforced.

#include "ddlab/lie/lie_model.hpp"
#include "ddlab/random_complex.hpp"
#include "ddlab/suites.hpp"
#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ddlab;
using namespace ddlab::test;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
  bool expect_fail = false;
};

std::string slurp(const std::filesystem::path& f) {
  std::ifstream in(f, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// Collects the first few failures of a criterion.
struct Tally {
  std::size_t failures = 0;
  std::string first;
  void fail(const std::string& what) {
    if (failures++ < 3) first += (first.empty() ? "" : "; ") + what;
  }
  void add(const SuiteReport& s, const std::string& where) {
    for (const auto& f : s.failures) fail(where + " " + s.name + ": " + f.to_string());
  }
  Outcome outcome(std::string ok_detail) const {
    if (failures == 0) return {true, std::move(ok_detail)};
    return {false, std::to_string(failures) + " failures: " + first};
  }
};

Outcome torus_suite() {
  Tally t;
  for (int n = 1; n <= 3; ++n) {
    const std::string file = "torus" + std::to_string(n) + ".se";
    const CohomologyEngine eng(corpus_complex(file));
    for (auto [p, q] : eng.complex().bidegrees()) {
      const std::size_t want = binom(n, p) * binom(n, q);
      for (Space s : kAllSpaces) {
        const bool cohomology = s == Space::h_dbar || s == Space::h_d || s == Space::h_bc || s == Space::h_a;
        if (eng.dim(s, p, q) != (cohomology ? want : 0)) t.fail(file + " " + key(s) + " at " + at_string(p, q));
      }
    }
    if (!regularity(eng).regular) t.fail(file + " not regular");
    for (const DegreeFlags& d : dgms_all(eng))
      if (!(d.agree() && d.b)) t.fail(file + " DGMS in degree " + std::to_string(d.k));
  }
  return t.outcome("n = 1,2,3: binomial tables, a..f = 0, regular, DGMS everywhere");
}

Outcome iwasawa_suite() {
  Tally t;
  const CohomologyEngine eng(corpus_complex("iwasawa.se"));
  for (const auto& d : fixture_drift(eng.table(), slurp(corpus_dir() / "fixtures" / "iwasawa.json"))) t.fail(d);
  const BidegreeFlags f = classify_bidegree(eng, 2, 3);
  const std::size_t a = eng.dim(Space::a, 2, 3), b = eng.dim(Space::b, 2, 3), d = eng.dim(Space::d, 2, 3);
  if (!(f.weak && a == 0)) t.fail("not weak at (2,3)");
  if (!(f.dual_mild && d == 0)) t.fail("not dual-mild at (2,3)");
  if (f.mild || b < 1) t.fail("mild at (2,3)");
  return t.outcome("table = oracle fixture; (2,3): a = 0, d = 0, b = " + std::to_string(b));
}

Outcome sl2c_claim() {
  const LoadedInput in = corpus_input("sl2c.se");
  const Sl2cReport r = example_sl2c(*in.model);
  std::ostringstream os;
  os << std::boolalpha << "d(omega^2) = 0: " << r.d_omega2_zero << ", omega^2 = d(primitive): " << r.omega2_eq_d_primitive
     << ", omega^2 = 2 d(primitive): " << r.omega2_eq_2_d_primitive << ", omega^2 exact: " << r.omega2_exact;
  return {r.ok(), os.str()};
}

// The only tolerated way for criterion 3 to fail.
bool sl2c_known_shape() {
  const LoadedInput in = corpus_input("sl2c.se");
  const Sl2cReport r = example_sl2c(*in.model);
  return r.d_omega2_zero && r.primitive_degree_3 && r.omega2_degree_4 && !r.omega2_eq_d_primitive &&
         r.omega2_eq_2_d_primitive && r.omega2_exact;
}

Outcome theorem_suites() {
  Tally t;
  std::size_t checks = 0;
  const CorpusSummary corpus = corpus_run(corpus_dir());
  for (const auto& e : corpus.entries) {
    for (const auto& s : e.report.suites) {
      checks += s.checks;
      t.add(s, e.name);
    }
    if (e.fixture != "match") t.fail(e.name + " fixture " + e.fixture);
  }
  const FuzzSummary fz = fuzz({1, 200, 40, std::nullopt});
  checks += fz.checks;
  for (const auto& f : fz.failures) t.fail("fuzz " + f);
  return t.outcome(std::to_string(corpus.entries.size()) + " corpus entries + " + std::to_string(fz.instances) +
                   " fuzz complexes, " + std::to_string(checks) + " checks");
}

Outcome invariance() {
  Tally t;
  std::vector<DoubleComplex> pool;
  for (const CorpusEntry& e : read_manifest(corpus_dir())) pool.push_back(corpus_complex(e.file, e.params));
  for (std::uint64_t s = 0; pool.size() < 25; ++s) pool.push_back(random_complex(1000 + s, 24));

  ScalarRng rng(2718);
  for (int i = 0; i < 50; ++i) {
    const DoubleComplex& x = pool[static_cast<std::size_t>(i) % pool.size()];
    if (invariant_table(base_change(x, random_iso(x, rng))) != invariant_table(x))
      t.fail("base change " + std::to_string(i));
  }
  for (int i = 0; i < 50; ++i) {
    const DoubleComplex& x = pool[rng.below(pool.size())];
    const DoubleComplex& y = pool[rng.below(pool.size())];
    if (invariant_table(direct_sum(x, y)) != add_tables(invariant_table(x), invariant_table(y)))
      t.fail("direct sum " + std::to_string(i));
  }
  return t.outcome("50 base changes, 50 direct sums");
}

Outcome geometric() {
  Tally t;
  std::size_t ran = 0, refused = 0;
  for (const CorpusEntry& e : read_manifest(corpus_dir())) {
    const LoadedInput in = corpus_input(e.file, e.params);
    const CohomologyEngine eng(in.complex);
    const bool should_run = in.model && in.model->unimodular();
    try {
      const SuiteReport s = geometric_suite(eng, in.model.get());
      ++ran;
      if (!should_run) t.fail(e.name + " was not refused");
      t.add(s, e.name);
    } catch (const GateViolation&) {
      ++refused;
      if (should_run) t.fail(e.name + " was refused");
    }
  }
  if (refused < 3) t.fail("expected affine2, square and zigzag to be refused");
  return t.outcome("ran on " + std::to_string(ran) + " unimodular models, refused " + std::to_string(refused));
}

Outcome sgg() {
  Tally t;
  std::size_t surfaces = 0;
  for (const CorpusEntry& e : read_manifest(corpus_dir())) {
    const LoadedInput in = corpus_input(e.file, e.params);
    const NamedCriteria c = named_criteria(CohomologyEngine(in.complex));
    if (!c.sgg || !c.sgg->consistent()) t.fail(e.name + " sGG routes disagree");
    if (geometric_inputs(in.complex) && c.sgg && !c.sgg->via_h01) t.fail(e.name + " h01 route missing");
    if (in.model && in.complex.n() == 2 && geometric_inputs(in.complex)) {
      ++surfaces;
      if (!c.surface || !c.surface->consistent()) t.fail(e.name + " surface conditions disagree");
    }
  }
  if (surfaces < 2) t.fail("expected torus2 and kodaira_thurston");
  return t.outcome("all entries consistent; " + std::to_string(surfaces) + " surfaces");
}

std::optional<std::string> run_capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  if (pclose(pipe) != 0) return std::nullopt;
  return out;
}

Outcome determinism() {
  const std::string cmd =
      std::string("\"") + DDLAB_CLI + "\" corpus run --json --dir \"" + corpus_dir().string() + "\"";
  const auto a = run_capture(cmd), b = run_capture(cmd);
  if (!a || !b) return {false, "could not run " + cmd};
  if (*a != *b) return {false, "CLI outputs differ"};
  if (to_json(corpus_run(corpus_dir())) != *a) return {false, "in-process output differs from the CLI"};
  return {true, "two CLI runs byte-identical (" + std::to_string(a->size()) + " bytes, sha256 " +
                    sha256_hex(*a).substr(0, 12) + ")"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "torus suite", 1, torus_suite},
      {2, "Iwasawa fixture suite", 10, iwasawa_suite},
      {3, "SL(2,C) exact square", 5, sl2c_claim, true},
      {4, "theorem suites on corpus + fuzz", 120, theorem_suites},
      {5, "invariance and additivity", 0, invariance},
      {6, "geometric suite and refusals", 0, geometric},
      {7, "sGG and surface consistency", 0, sgg},
      {8, "determinism", 0, determinism},
  };

  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;

    char timing[64];
    if (c.limit_s > 0) std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit_s);
    else std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " [" << timing << "] " << o.detail
              << (in_time ? "" : " (over time limit)");

    if (c.expect_fail) {
      const bool known = !pass && o.pass == false && in_time && sl2c_known_shape();
      std::cout << (known ? " (known: the quoted primitive gives omega^2 / 2)" : " (unexpected outcome)");
      if (!known) ++unexpected;
    } else if (!pass) {
      ++unexpected;
    }
    std::cout << "\n";
  }
  return unexpected == 0 ? 0 : 1;
}
