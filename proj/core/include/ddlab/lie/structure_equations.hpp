#pragma once

#include "ddlab/errors.hpp"
#include "ddlab/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddlab {

/// One factor of a wedge monomial: generator index, holomorphic or conjugate.
struct Letter {
  std::size_t gen = 0;
  bool conj = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// coef * [param] * monomial
struct SeTerm {
  Scalar coef{1};
  std::optional<std::string> param;
  std::vector<Letter> monomial;
  int line = 0;
  int col = 0;
};

struct StructureEquations {
  int n = 0;
  std::vector<std::string> generators;               // in order of their d lines
  std::vector<std::vector<SeTerm>> differentials;    // differentials[k] = d(generators[k])
  std::vector<std::string> param_names;              // declaration order
  std::map<std::string, std::optional<Rational>> param_defaults;

  std::optional<std::size_t> generator_index(std::string_view name) const;
};

enum class SeErrorKind { syntax, unknown_generator, bidegree_violation, nonlinear_parameter, missing_equation,
                         unknown_parameter };

const char* to_string(SeErrorKind k);

struct SeError {
  int line = 0;
  int col = 0;
  SeErrorKind kind = SeErrorKind::syntax;
  std::string message;
  std::string to_string() const;
};

struct SeParseError : InputError {
  explicit SeParseError(std::vector<SeError> e);
  std::vector<SeError> errors;
};

/// Parses the `.se` structure-equation format. Throws SeParseError carrying
/// every error found (line/column + category).
StructureEquations parse_se(std::string_view text);

using ParamAssignment = std::map<std::string, Rational>;

/// Declared defaults overridden by `overrides`. Throws SeParseError
/// (unknown_parameter) for an override naming no declared parameter or a
/// parameter left without a value.
ParamAssignment resolve_params(const StructureEquations& se, const ParamAssignment& overrides);

/// Parses `name=rational` (CLI form).
std::pair<std::string, Rational> parse_param_override(std::string_view text);

}  // namespace ddlab
