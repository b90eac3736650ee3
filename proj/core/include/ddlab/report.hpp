#pragma once

#include "ddlab/cohomology.hpp"
#include "ddlab/lemma_lab.hpp"
#include "ddlab/suites.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddlab {

inline constexpr int kSchemaVersion = 1;

struct InputIdentity {
  std::string file;
  std::string kind;                           // "se" or "dcx"
  std::map<std::string, std::string> params;  // canonical rational text
  std::string sha256;                         // of the file bytes
};

/// Everything the pipeline learns about one input.
struct AnalysisReport {
  InputIdentity input;
  int n = 0;
  GeometricFlags flags;
  bool real_structure = false;

  InvariantTable table;
  std::map<Bidegree, BidegreeFlags> bidegree_flags;
  std::vector<DegreeFlags> degrees;
  std::vector<ConeMapReport> cone_maps;
  RegularityReport regularity;
  bool ddbar_lemma = false;  // b_k in every degree
  NamedCriteria named;
  std::optional<Bidegree> focus;

  /// Theorem-backed suites; any failure here is an implementation bug.
  std::vector<SuiteReport> suites;
  /// Present when the manifold-only suite was refused, with the reason.
  std::optional<std::string> geometric_skipped;

  /// Claims quoted from the literature that are checked but are not theorems
  /// of the engine; they never change the exit code.
  std::optional<Sl2cReport> sl2c;

  bool theorem_failures() const;
  int exit_code() const { return theorem_failures() ? 1 : 0; }
};

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// Deterministic: sorted keys, two-space indent, trailing newline.
std::string to_json(const AnalysisReport& r);
std::string to_markdown(const AnalysisReport& r);

/// Table in the committed fixture layout: {"name", "table": {"p,q": {...}}, "betti": {"k": n}}.
std::string fixture_json(std::string_view name, const InvariantTable& t);

/// Differences between a computed table and a fixture document, one line per
/// differing entry; empty when they match.
std::vector<std::string> fixture_drift(const InvariantTable& t, std::string_view fixture_text);

}  // namespace ddlab
