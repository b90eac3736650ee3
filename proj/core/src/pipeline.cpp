#include "ddlab/pipeline.hpp"

#include "ddlab/dcx_io.hpp"
#include "ddlab/errors.hpp"
#include "ddlab/random_complex.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace ddlab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw InputError("cannot write " + file.string());
  out << text;
}

std::string violations_text(const std::vector<Violation>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.to_string();
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

LoadedInput load_input(const fs::path& file, const ParamAssignment& overrides, std::string display_name) {
  const std::string text = read_file(file);
  LoadedInput in;
  in.id.file = display_name.empty() ? file.string() : std::move(display_name);
  in.id.sha256 = sha256_hex(text);

  const std::string ext = file.extension().string();
  if (ext == ".se") {
    in.id.kind = "se";
    StructureEquations se = parse_se(text);
    ParamAssignment pa = resolve_params(se, overrides);
    for (const auto& [k, v] : pa) in.id.params[k] = rational_to_string(v);
    auto model = std::make_shared<const LieModel>(std::move(se), std::move(pa));
    in.complex = model->complex();
    in.model = std::move(model);
  } else if (ext == ".dcx") {
    in.id.kind = "dcx";
    if (!overrides.empty()) throw InputError("parameters only apply to .se inputs");
    in.complex = load_dcx(text);
    if (auto v = validate(in.complex); !v.empty())
      throw InputError("not a double complex: " + violations_text(v));
    if (auto v = validate_real_structure(in.complex); !v.empty())
      throw InputError("sigma is not a real structure: " + violations_text(v));
  } else {
    throw InputError("unknown input kind '" + ext + "' (expected .se or .dcx)");
  }
  return in;
}

std::vector<SuiteReport> algebraic_suites(const CohomologyEngine& eng) {
  return {sequence_suite(eng), identity_suite(eng), flag_suite(eng),           regularity_suite(eng),
          dgms_suite(eng),     cone_map_suite(eng), named_criteria_suite(eng)};
}

AnalysisReport analyze(const LoadedInput& in, const AnalyzeOptions& opts) {
  CohomologyEngine eng(in.complex);
  const DoubleComplex& dc = eng.complex();

  AnalysisReport r;
  r.input = in.id;
  r.n = dc.n();
  r.flags = dc.flags;
  r.real_structure = dc.real.has_value();
  r.table = eng.table();
  for (auto [p, q] : dc.bidegrees()) r.bidegree_flags[{p, q}] = classify_bidegree(eng, p, q);
  r.degrees = dgms_all(eng);
  r.ddbar_lemma = std::all_of(r.degrees.begin(), r.degrees.end(), [](const DegreeFlags& f) { return f.b; });
  for (int p : cone_map_degrees(eng)) r.cone_maps.push_back(cone_maps(eng, p));
  r.regularity = regularity(eng);
  r.named = named_criteria(eng);
  r.focus = opts.focus;

  r.suites = algebraic_suites(eng);
  try {
    r.suites.push_back(geometric_suite(eng, in.model.get()));
  } catch (const GateViolation& e) {
    r.geometric_skipped = e.what();
  }

  if (in.model && in.model->n() == 3) {
    const auto& se = in.model->equations();
    if (se.generator_index("alpha") && se.generator_index("beta") && se.generator_index("eta"))
      r.sl2c = example_sl2c(*in.model);
  }
  return r;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t i) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(i));
}

SuiteReport fuzz_instance(const DoubleComplex& dc, std::uint64_t seed) {
  SuiteReport rep;
  rep.name = "fuzz";
  try {
    auto v = validate(dc);
    if (!rep.expect(v.empty(), "validates", "all", violations_text(v))) return rep;
    CohomologyEngine eng(dc);
    for (const SuiteReport& s : algebraic_suites(eng)) {
      rep.checks += s.checks;
      for (auto f : s.failures) {
        f.check = s.name + ": " + f.check;
        rep.failures.push_back(std::move(f));
      }
    }
    const InvariantTable t = eng.table();

    ScalarRng rng(splitmix64(seed ^ 0x5bd1e995ULL));
    const DoubleComplex moved = base_change(dc, random_iso(dc, rng));
    rep.expect(invariant_table(moved) == t, "table invariant under base change", "all");

    const std::size_t partner_budget = 1 + rng.below(std::max<std::size_t>(1, dc.total_dim() / 2));
    const DoubleComplex other = random_complex(splitmix64(seed + 1), partner_budget);
    const InvariantTable sum = invariant_table(direct_sum(dc, other));
    rep.expect(sum == add_tables(t, invariant_table(other)), "table additive under direct sum", "all");
  } catch (const std::exception& e) {
    rep.expect(false, "no exception", "all", e.what());
  }
  return rep;
}

FuzzSummary fuzz(const FuzzOptions& opts) {
  std::vector<SuiteReport> results(opts.count);
  std::vector<DoubleComplex> complexes(opts.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opts.count; i = next++) {
      const std::uint64_t s = instance_seed(opts.seed, i);
      complexes[i] = random_complex(s, opts.budget);
      results[i] = fuzz_instance(complexes[i], s);
    }
  };
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  FuzzSummary sum;
  sum.instances = opts.count;
  for (std::size_t i = 0; i < opts.count; ++i) {
    sum.checks += results[i].checks;
    if (results[i].ok()) continue;
    for (const auto& f : results[i].failures)
      sum.failures.push_back("instance " + std::to_string(i) + ": " + f.to_string());
    if (opts.dump_dir) {
      fs::create_directories(*opts.dump_dir);
      fs::path out = *opts.dump_dir / ("fuzz_" + std::to_string(opts.seed) + "_" + std::to_string(i) + ".dcx");
      write_file(out, save_dcx(complexes[i]));
      sum.dumped.push_back(out);
    }
  }
  return sum;
}

std::vector<CorpusEntry> read_manifest(const fs::path& corpus_dir) {
  const std::string text = read_file(corpus_dir / "manifest.json");
  std::vector<CorpusEntry> out;
  try {
    const json j = json::parse(text);
    for (const auto& e : j.at("entries")) {
      CorpusEntry c;
      c.name = e.at("name").get<std::string>();
      c.file = e.at("file").get<std::string>();
      if (e.contains("params"))
        for (const auto& [k, v] : e.at("params").items()) c.params[k] = parse_rational(v.get<std::string>());
      out.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw InputError("bad corpus manifest: " + std::string(e.what()));
  } catch (const ScalarSyntaxError& e) {
    throw InputError("bad parameter in corpus manifest: " + std::string(e.what()));
  }
  return out;
}

bool CorpusSummary::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const CorpusResult& r) {
    return r.report.exit_code() == 0 && (r.fixture == "match" || r.fixture == "updated");
  });
}

CorpusSummary corpus_run(const fs::path& corpus_dir, bool update_fixtures) {
  CorpusSummary sum;
  for (const CorpusEntry& e : read_manifest(corpus_dir)) {
    CorpusResult r;
    r.name = e.name;
    r.report = analyze(load_input(corpus_dir / e.file, e.params, e.file));
    const fs::path fixture = corpus_dir / "fixtures" / (e.name + ".json");
    if (update_fixtures) {
      fs::create_directories(fixture.parent_path());
      write_file(fixture, fixture_json(e.name, r.report.table));
      r.fixture = "updated";
    } else if (fs::exists(fixture)) {
      r.drift = fixture_drift(r.report.table, read_file(fixture));
      r.fixture = r.drift.empty() ? "match" : "drift";
    } else {
      r.fixture = "missing";
    }
    sum.entries.push_back(std::move(r));
  }
  return sum;
}

std::string to_json(const CorpusSummary& s) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json entries = json::array();
  for (const auto& r : s.entries) {
    json e;
    e["name"] = r.name;
    e["fixture"] = r.fixture;
    e["drift"] = r.drift;
    e["report"] = json::parse(to_json(r.report));
    entries.push_back(std::move(e));
  }
  j["entries"] = entries;
  j["ok"] = s.ok();
  return j.dump(2) + "\n";
}

std::string to_markdown(const CorpusSummary& s) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "# Corpus\n\n| entry | regular | sGG | geometric suite | theorem failures | fixture |\n"
     << "|---|---|---|---|---|---|\n";
  for (const auto& r : s.entries) {
    std::size_t fails = 0;
    for (const auto& x : r.report.suites) fails += x.failures.size();
    os << "| " << r.name << " | " << yn(r.report.regularity.regular) << " | "
       << (r.report.named.sgg ? yn(r.report.named.sgg->verdict()) : "-") << " | "
       << (r.report.geometric_skipped ? "skipped" : "run") << " | " << fails << " | " << r.fixture << " |\n";
  }
  for (const auto& r : s.entries)
    for (const auto& d : r.drift) os << "\n- drift in " << r.name << ": " << d;
  os << "\n\nall ok: " << yn(s.ok()) << "\n";
  return os.str();
}

}  // namespace ddlab
