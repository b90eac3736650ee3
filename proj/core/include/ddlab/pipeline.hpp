#pragma once

#include "ddlab/lie/lie_model.hpp"
#include "ddlab/report.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ddlab {

struct LoadedInput {
  InputIdentity id;
  DoubleComplex complex;
  std::shared_ptr<const LieModel> model;  // only for `.se`
};

/// Reads a `.se` or `.dcx` file. `.se` parameters are resolved from the
/// declared defaults and `overrides`. Throws InputError (exit code 2) on any
/// read, parse, parameter, or d^2 problem; `.dcx` inputs are validated here.
LoadedInput load_input(const std::filesystem::path& file, const ParamAssignment& overrides = {},
                       std::string display_name = {});

struct AnalyzeOptions {
  std::optional<Bidegree> focus;
};

/// Tables, flags, DGMS, cone maps, named criteria, and every theorem-backed
/// suite (the geometric one only where it applies).
AnalysisReport analyze(const LoadedInput& in, const AnalyzeOptions& opts = {});

/// Sequences, the C -> D and E -> B isomorphisms, identities, flags, regularity, DGMS,
/// cone maps and the sGG routes: every check that holds on any double complex.
std::vector<SuiteReport> algebraic_suites(const CohomologyEngine& eng);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t budget = 40;
  std::optional<std::filesystem::path> dump_dir;
};

struct FuzzSummary {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::filesystem::path> dumped;
  bool ok() const { return failures.empty(); }
};

/// Seed of instance i of a run with `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t i);

/// All unconditional suites on one random complex, plus invariance under a
/// random base change and additivity against a second random complex.
SuiteReport fuzz_instance(const DoubleComplex& dc, std::uint64_t seed);

FuzzSummary fuzz(const FuzzOptions& opts);

struct CorpusEntry {
  std::string name;
  std::string file;
  ParamAssignment params;
};

std::vector<CorpusEntry> read_manifest(const std::filesystem::path& corpus_dir);

struct CorpusResult {
  std::string name;
  AnalysisReport report;
  std::string fixture;  // "match", "drift", "missing", "updated"
  std::vector<std::string> drift;
};

struct CorpusSummary {
  std::vector<CorpusResult> entries;
  bool ok() const;
};

/// Analyzes every manifest entry and compares its table with
/// fixtures/<name>.json; rewrites the fixtures instead when `update_fixtures`.
CorpusSummary corpus_run(const std::filesystem::path& corpus_dir, bool update_fixtures = false);

std::string to_json(const CorpusSummary& s);
std::string to_markdown(const CorpusSummary& s);

}  // namespace ddlab
