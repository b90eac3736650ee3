// ddlab command-line tool. Exit codes: 0 ok, 1 a theorem-backed check failed,
// 2 input error.

#include "ddlab/errors.hpp"
#include "ddlab/lie/structure_equations.hpp"
#include "ddlab/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace ddlab;

namespace {

constexpr int kExitInput = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

ParamAssignment parse_params(const std::vector<std::string>& raw) {
  ParamAssignment pa;
  for (const auto& s : raw) {
    auto [k, v] = parse_param_override(s);
    pa[k] = v;
  }
  return pa;
}

fs::path default_corpus() {
  if (fs::exists("corpus/manifest.json")) return "corpus";
  return DDLAB_DEFAULT_CORPUS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddlab: Bott-Chern, Aeppli and Dolbeault cohomology of double complexes, exactly"};
  app.require_subcommand(1);

  std::string file, out;
  std::vector<std::string> params;
  std::vector<int> pq;
  bool as_json = false, as_md = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a .se or .dcx file");
  analyze_cmd->add_option("file", file, "Input file")->required();
  analyze_cmd->add_option("--param", params, "Parameter override name=rational (repeatable)");
  analyze_cmd->add_option("--pq", pq, "Bidegree to highlight")->expected(2);
  auto* j1 = analyze_cmd->add_flag("--json", as_json, "JSON output");
  analyze_cmd->add_flag("--md", as_md, "Markdown output (default)")->excludes(j1);
  analyze_cmd->add_option("--out", out, "Write the report here instead of stdout");

  auto* validate_cmd = app.add_subcommand("validate", "Check that a file is a valid double complex");
  validate_cmd->add_option("file", file, "Input file")->required();
  validate_cmd->add_option("--param", params, "Parameter override name=rational (repeatable)");

  std::uint64_t seed = 1;
  std::size_t count = 200, budget = 40;
  std::string dump_dir;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run every unconditional suite on random complexes");
  fuzz_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
  fuzz_cmd->add_option("--count", count, "Number of complexes")->capture_default_str();
  fuzz_cmd->add_option("--budget", budget, "Total dimension of each complex")->capture_default_str()->check(
      CLI::PositiveNumber);
  fuzz_cmd->add_option("--dump", dump_dir, "Directory for .dcx replays of failing complexes");

  auto* corpus_cmd = app.add_subcommand("corpus", "Committed corpus");
  corpus_cmd->require_subcommand(1);
  bool update_fixtures = false;
  std::string corpus_dir;
  auto* run_cmd = corpus_cmd->add_subcommand("run", "Analyze every entry and compare against fixtures");
  run_cmd->add_flag("--update-fixtures", update_fixtures, "Rewrite fixtures from the current engine");
  auto* j2 = run_cmd->add_flag("--json", as_json, "JSON output");
  run_cmd->add_flag("--md", as_md, "Markdown output (default)")->excludes(j2);
  run_cmd->add_option("--dir", corpus_dir, "Corpus directory");
  run_cmd->add_option("--out", out, "Write the summary here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) {
      AnalyzeOptions opts;
      if (pq.size() == 2) opts.focus = Bidegree{pq[0], pq[1]};
      const AnalysisReport r = analyze(load_input(file, parse_params(params)), opts);
      emit(as_json ? to_json(r) : to_markdown(r), out);
      return r.exit_code();
    }
    if (*validate_cmd) {
      const LoadedInput in = load_input(file, parse_params(params));
      std::cout << "valid: " << in.id.file << " (" << in.id.kind << ", total dimension "
                << in.complex.total_dim() << (in.complex.real ? ", real structure" : "") << ")\n";
      return 0;
    }
    if (*fuzz_cmd) {
      FuzzOptions opts{seed, count, budget, std::nullopt};
      if (!dump_dir.empty()) opts.dump_dir = dump_dir;
      const FuzzSummary s = fuzz(opts);
      std::cout << "fuzz: seed " << seed << ", " << s.instances << " complexes of dimension " << budget << ", "
                << s.checks << " checks, " << s.failures.size() << " failures\n";
      for (const auto& f : s.failures) std::cout << "  " << f << "\n";
      for (const auto& p : s.dumped) std::cout << "  dumped " << p.string() << "\n";
      return s.ok() ? 0 : 1;
    }
    if (*run_cmd) {
      const fs::path dir = corpus_dir.empty() ? default_corpus() : fs::path(corpus_dir);
      const CorpusSummary s = corpus_run(dir, update_fixtures);
      emit(as_json ? to_json(s) : to_markdown(s), out);
      return s.ok() ? 0 : 1;
    }
  } catch (const SeParseError& e) {
    for (const auto& x : e.errors) std::cerr << file << ":" << x.to_string() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ScalarSyntaxError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
