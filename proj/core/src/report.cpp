#include "ddlab/report.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace ddlab {

using nlohmann::json;

bool AnalysisReport::theorem_failures() const {
  return std::any_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return !s.ok(); });
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string out;
  out.reserve(2 * len);
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

namespace {

json table_json(const InvariantTable& t) {
  json out = json::object();
  for (const auto& [bd, nums] : t.at) {
    json cell = json::object();
    for (Space s : kAllSpaces) cell[key(s)] = nums[s];
    out[bd.key()] = cell;
  }
  return out;
}

json betti_json(const InvariantTable& t) {
  json out = json::object();
  for (const auto& [k, b] : t.betti) out[std::to_string(k)] = b;
  return out;
}

json flags_json(const BidegreeFlags& f) {
  return {{"mild", f.mild},   {"dual_mild", f.dual_mild}, {"tilde_mild", f.tilde_mild},
          {"tilde_dual_mild", f.tilde_dual_mild}, {"weak", f.weak}, {"strong", f.strong},
          {"script_D", f.script_D}};
}

json degree_json(const DegreeFlags& f) {
  return {{"a", f.a}, {"b", f.b}, {"c", f.c}, {"a_star", f.a_star}, {"b_star", f.b_star}, {"c_star", f.c_star},
          {"agree", f.agree()}};
}

json cone_json(const ConeMapReport& c) {
  json j = {{"p", c.p},
            {"rank_T", c.rank_T},
            {"rank_W", c.rank_W},
            {"ker_T", c.ker_T},
            {"ker_W", c.ker_W},
            {"a", c.a},
            {"b", c.b},
            {"b_tilde", c.b_tilde},
            {"T_zero", c.T_zero},
            {"W_zero", c.W_zero},
            {"kernels_equal", c.kernels_equal},
            {"equivalences", {{"T_zero_iff_b_tilde_zero", c.eq_T_btilde},
                              {"kernels_equal_iff_a_zero", c.eq_kernels_a},
                              {"W_zero_iff_b_zero", c.eq_W_b}}},
            {"ranks_ok", c.ranks_ok},
            {"factorization_ok", c.factorization_ok}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

json suite_json(const SuiteReport& s) {
  json fails = json::array();
  for (const auto& f : s.failures) fails.push_back({{"check", f.check}, {"where", f.where}, {"detail", f.detail}});
  return {{"checks", s.checks}, {"failures", fails}, {"ok", s.ok()}};
}

json report_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json params = json::object();
  for (const auto& [k, v] : r.input.params) params[k] = v;
  j["input"] = {{"file", r.input.file}, {"kind", r.input.kind}, {"params", params}, {"sha256", r.input.sha256}};
  j["n"] = r.n;
  j["geometric_flags"] = {{"is_lie_model", r.flags.is_lie_model},
                          {"unimodular", r.flags.unimodular},
                          {"connected_top", r.flags.connected_top}};
  j["real_structure"] = r.real_structure;
  j["table"] = table_json(r.table);
  j["betti"] = betti_json(r.table);

  json bf = json::object();
  for (const auto& [bd, f] : r.bidegree_flags) bf[bd.key()] = flags_json(f);
  j["bidegree_flags"] = bf;

  json deg = json::object();
  for (const auto& f : r.degrees) deg[std::to_string(f.k)] = degree_json(f);
  j["degree_flags"] = deg;

  json cones = json::array();
  for (const auto& c : r.cone_maps) cones.push_back(cone_json(c));
  j["cone_maps"] = cones;

  json verdicts;
  verdicts["regular"] = r.regularity.regular;
  verdicts["regularity"] = {{"all_b_zero", r.regularity.b_zero},
                            {"all_c_zero", r.regularity.c_zero},
                            {"all_d_zero", r.regularity.d_zero},
                            {"all_e_zero", r.regularity.e_zero}};
  verdicts["ddbar_lemma"] = r.ddbar_lemma;
  if (r.named.sgg) {
    const SggReport& s = *r.named.sgg;
    json sg = {{"via_b_tilde", s.via_b_tilde}, {"via_T", s.via_T}, {"consistent", s.consistent()},
               {"verdict", s.verdict()}};
    sg["via_h01"] = s.via_h01 ? json(*s.via_h01) : json(nullptr);
    verdicts["sgg"] = sg;
  }
  if (r.named.surface) {
    const SurfaceReport& s = *r.named.surface;
    verdicts["surface"] = {{"h21_a_eq_dbar", s.h21_a_eq_dbar},
                           {"b_tilde21_zero", s.b_tilde21_zero},
                           {"all_abcdef_zero", s.all_abcdef_zero},
                           {"consistent", s.consistent()},
                           {"model_level_kahler_indicator", s.consistent() && s.all_abcdef_zero}};
  }
  j["verdicts"] = verdicts;

  if (r.focus) {
    const Bidegree f = *r.focus;
    json fj = {{"bidegree", f.key()}};
    if (auto it = r.bidegree_flags.find(f); it != r.bidegree_flags.end()) {
      fj["flags"] = flags_json(it->second);
      json cell = json::object();
      for (Space s : kAllSpaces) cell[key(s)] = r.table.get(s, f.p, f.q);
      fj["numbers"] = cell;
    } else {
      fj["flags"] = nullptr;
    }
    j["focus"] = fj;
  }

  json suites = json::object();
  json violations = json::array();
  for (const auto& s : r.suites) {
    suites[s.name] = suite_json(s);
    for (const auto& f : s.failures) violations.push_back(s.name + ": " + f.to_string());
  }
  if (r.geometric_skipped) suites["geometric"] = {{"skipped", *r.geometric_skipped}};
  j["suites"] = suites;
  j["violations"] = violations;

  j["literature_claims"] = json::object();
  if (r.sl2c) {
    const Sl2cReport& s = *r.sl2c;
    j["literature_claims"]["sl2c_exact_square"] = {{"d_omega2_zero", s.d_omega2_zero},
                                                   {"omega2_eq_d_primitive", s.omega2_eq_d_primitive},
                                                   {"primitive_degree_3", s.primitive_degree_3},
                                                   {"omega2_degree_4", s.omega2_degree_4},
                                                   {"omega2_eq_2_d_primitive", s.omega2_eq_2_d_primitive},
                                                   {"omega2_exact", s.omega2_exact},
                                                   {"omega3_top_nonzero", s.omega3_top_nonzero},
                                                   {"holds", s.ok()}};
  }

  j["disclaimer"] = r.flags.is_lie_model
                        ? "Cohomology of the invariant-form model. Whether it equals the cohomology of a compact "
                          "quotient is not decided here. Real groups H^{k,k}(M,R) have real dimension equal to the "
                          "complex dimensions reported."
                        : "Abstract double complex; manifold-only statements are not checked.";
  j["exit_code"] = r.exit_code();
  return j;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void grid(std::ostringstream& os, const InvariantTable& t, Space s) {
  os << "\n### " << key(s) << "\n\n| q \\ p |";
  for (int p = t.p_range.lo; p <= t.p_range.hi; ++p) os << ' ' << p << " |";
  os << "\n|---|";
  for (int p = t.p_range.lo; p <= t.p_range.hi; ++p) os << "---|";
  os << '\n';
  for (int q = t.q_range.hi; q >= t.q_range.lo; --q) {
    os << "| " << q << " |";
    for (int p = t.p_range.lo; p <= t.p_range.hi; ++p) os << ' ' << t.get(s, p, q) << " |";
    os << '\n';
  }
}

}  // namespace

std::string to_json(const AnalysisReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_markdown(const AnalysisReport& r) {
  std::ostringstream os;
  os << "# " << r.input.file << "\n\n";
  os << "- kind: " << r.input.kind << ", n = " << r.n << "\n";
  for (const auto& [k, v] : r.input.params) os << "- param " << k << " = " << v << "\n";
  os << "- sha256: `" << r.input.sha256 << "`\n";
  os << "- Lie model: " << yesno(r.flags.is_lie_model) << ", unimodular: " << yesno(r.flags.unimodular)
     << ", real structure: " << yesno(r.real_structure) << "\n\n";

  os << "## Verdicts\n\n";
  os << "- regular: " << yesno(r.regularity.regular) << "\n";
  os << "- ddbar-lemma (every degree): " << yesno(r.ddbar_lemma) << "\n";
  if (r.named.sgg) {
    const auto& s = *r.named.sgg;
    os << "- sGG: " << yesno(s.verdict()) << " (b~ route " << yesno(s.via_b_tilde) << ", T route " << yesno(s.via_T);
    if (s.via_h01) os << ", h^{0,1} route " << yesno(*s.via_h01);
    os << ")\n";
  }
  if (r.named.surface) {
    const auto& s = *r.named.surface;
    os << "- surface conditions: h_A^{2,1}=h_dbar^{2,1} " << yesno(s.h21_a_eq_dbar) << ", b~^{2,1}=0 "
       << yesno(s.b_tilde21_zero) << ", all a..f zero " << yesno(s.all_abcdef_zero) << "\n";
  }
  if (r.focus) {
    const Bidegree f = *r.focus;
    os << "\n## Bidegree (" << f.key() << ")\n\n";
    if (auto it = r.bidegree_flags.find(f); it != r.bidegree_flags.end()) {
      const auto& b = it->second;
      os << "| mild | dual mild | tilde mild | tilde dual mild | weak | strong | script D |\n"
         << "|---|---|---|---|---|---|---|\n"
         << "| " << yesno(b.mild) << " | " << yesno(b.dual_mild) << " | " << yesno(b.tilde_mild) << " | "
         << yesno(b.tilde_dual_mild) << " | " << yesno(b.weak) << " | " << yesno(b.strong) << " | "
         << yesno(b.script_D) << " |\n";
    } else {
      os << "outside the range\n";
    }
  }

  os << "\n## Numbers\n";
  for (Space s : kAllSpaces) grid(os, r.table, s);
  os << "\n### Betti\n\n| k | b_k |\n|---|---|\n";
  for (const auto& [k, b] : r.table.betti) os << "| " << k << " | " << b << " |\n";

  os << "\n## Degree conditions\n\n| k | a | b | c | a* | b* | c* |\n|---|---|---|---|---|---|---|\n";
  for (const auto& f : r.degrees)
    os << "| " << f.k << " | " << yesno(f.a) << " | " << yesno(f.b) << " | " << yesno(f.c) << " | "
       << yesno(f.a_star) << " | " << yesno(f.b_star) << " | " << yesno(f.c_star) << " |\n";

  if (!r.cone_maps.empty()) {
    os << "\n## Cone maps\n\n| p | rank T | rank W | dim Ker T | dim Ker W | a | b | b~ | ok |\n"
       << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& c : r.cone_maps)
      os << "| " << c.p << " | " << c.rank_T << " | " << c.rank_W << " | " << c.ker_T << " | " << c.ker_W << " | "
         << c.a << " | " << c.b << " | " << c.b_tilde << " | " << yesno(c.ok()) << " |\n";
  }

  os << "\n## Suites\n\n| suite | checks | failures |\n|---|---|---|\n";
  for (const auto& s : r.suites) os << "| " << s.name << " | " << s.checks << " | " << s.failures.size() << " |\n";
  if (r.geometric_skipped) os << "| geometric | skipped: " << *r.geometric_skipped << " | |\n";
  for (const auto& s : r.suites)
    for (const auto& f : s.failures) os << "\n- **" << s.name << "**: " << f.to_string();

  if (r.sl2c) {
    const auto& s = *r.sl2c;
    os << "\n## Exact square on sl(2,C)\n\n"
       << "- d(omega^2) = 0: " << yesno(s.d_omega2_zero) << "\n"
       << "- omega^2 = d(primitive): " << yesno(s.omega2_eq_d_primitive) << "\n"
       << "- omega^2 = 2 d(primitive): " << yesno(s.omega2_eq_2_d_primitive) << "\n"
       << "- omega^2 exact: " << yesno(s.omega2_exact) << "\n"
       << "- omega^3 top coefficient nonzero: " << yesno(s.omega3_top_nonzero) << "\n";
  }
  os << "\nexit code: " << r.exit_code() << "\n";
  return os.str();
}

std::string fixture_json(std::string_view name, const InvariantTable& t) {
  json j;
  j["name"] = std::string(name);
  j["table"] = table_json(t);
  j["betti"] = betti_json(t);
  return j.dump(1) + "\n";
}

std::vector<std::string> fixture_drift(const InvariantTable& t, std::string_view fixture_text) {
  json want;
  try {
    want = json::parse(fixture_text);
  } catch (const json::exception& e) {
    return {std::string("fixture is not valid JSON: ") + e.what()};
  }
  json have = json::object();
  have["table"] = table_json(t);
  have["betti"] = betti_json(t);
  json expected = json::object();
  expected["table"] = want.value("table", json::object());
  expected["betti"] = want.value("betti", json::object());

  std::vector<std::string> out;
  for (const auto& op : json::diff(expected, have)) {
    std::string line = op.at("op").get<std::string>() + " " + op.at("path").get<std::string>();
    if (op.contains("value")) line += " -> " + op.at("value").dump();
    out.push_back(line);
  }
  return out;
}

}  // namespace ddlab
