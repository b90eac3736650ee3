#include "ddlab/lie/structure_equations.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ddlab {

const char* to_string(SeErrorKind k) {
  switch (k) {
    case SeErrorKind::syntax: return "syntax";
    case SeErrorKind::unknown_generator: return "unknown generator";
    case SeErrorKind::bidegree_violation: return "bidegree violation";
    case SeErrorKind::nonlinear_parameter: return "nonlinear parameter use";
    case SeErrorKind::missing_equation: return "missing equation";
    case SeErrorKind::unknown_parameter: return "unknown parameter";
  }
  return "?";
}

std::string SeError::to_string() const {
  return std::to_string(line) + ":" + std::to_string(col) + ": " + ddlab::to_string(kind) + ": " + message;
}

namespace {

std::string join_errors(const std::vector<SeError>& e) {
  std::string out;
  for (const auto& x : e) {
    if (!out.empty()) out += "\n";
    out += x.to_string();
  }
  return out.empty() ? "structure equations rejected" : out;
}

}  // namespace

SeParseError::SeParseError(std::vector<SeError> e) : InputError(join_errors(e)), errors(std::move(e)) {}

std::optional<std::size_t> StructureEquations::generator_index(std::string_view name) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k] == name) return k;
  return std::nullopt;
}

namespace {

enum class Tok { ident, number, lparen, rparen, star, caret, plus, minus, equals, end };

struct Token {
  Tok kind;
  std::string text;
  int col;
};

bool ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
}

struct Line {
  int number;
  std::vector<Token> tokens;
  std::string_view raw;
};

// Returns false (and records an error) on an unexpected character.
bool tokenize(std::string_view s, int line, std::vector<Token>& out, std::vector<SeError>& errors) {
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      Tok k;
      switch (c) {
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case '*': k = Tok::star; break;
        case '^': k = Tok::caret; break;
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '=': k = Tok::equals; break;
        default:
          errors.push_back({line, col, SeErrorKind::syntax, std::string("unexpected character '") + c + "'"});
          return false;
      }
      out.push_back({k, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::end, "", static_cast<int>(s.size()) + 1});
  return true;
}

class RhsParser {
 public:
  RhsParser(const Line& line, std::size_t start, const StructureEquations& se, std::vector<SeError>& errors)
      : line_(line), pos_(start), se_(se), errors_(errors) {}

  // Returns false when any error was recorded for this line.
  bool parse(std::vector<SeTerm>& terms) {
    const std::size_t before = errors_.size();
    bool negative = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) negative = next().kind == Tok::minus;
    for (;;) {
      if (!term(negative, terms)) return false;
      if (peek().kind == Tok::end) break;
      if (peek().kind != Tok::plus && peek().kind != Tok::minus) {
        fail(SeErrorKind::syntax, "expected '+' or '-' between terms, got '" + peek().text + "'");
        return false;
      }
      negative = next().kind == Tok::minus;
    }
    return errors_.size() == before;
  }

 private:
  const Token& peek() const { return line_.tokens[pos_]; }
  const Token& next() { return line_.tokens[pos_++]; }
  void fail(SeErrorKind k, std::string msg) { fail_at(peek().col, k, std::move(msg)); }
  void fail_at(int col, SeErrorKind k, std::string msg) { errors_.push_back({line_.number, col, k, std::move(msg)}); }

  std::optional<Letter> letter(const std::string& name) {
    if (auto k = se_.generator_index(name)) return Letter{*k, false};
    // `<gen>bar`, or `<stem>bar<digits>` for a generator `<stem><digits>`.
    auto at = name.rfind("bar");
    if (at == std::string::npos) return std::nullopt;
    std::string tail = name.substr(at + 3);
    bool digits = std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!digits) return std::nullopt;
    if (auto k = se_.generator_index(name.substr(0, at) + tail)) return Letter{*k, true};
    return std::nullopt;
  }

  bool is_param(const std::string& name) const { return se_.param_defaults.count(name) > 0; }

  bool term(bool negative, std::vector<SeTerm>& terms) {
    SeTerm t;
    t.line = line_.number;
    t.col = peek().col;
    bool have_monomial = false, zero_literal = false;
    for (;;) {
      const Token& tk = peek();
      if (tk.kind == Tok::lparen) {
        std::string text;
        int depth = 0;
        do {
          if (peek().kind == Tok::end) {
            fail(SeErrorKind::syntax, "unbalanced parenthesis");
            return false;
          }
          const Token& x = next();
          depth += x.kind == Tok::lparen ? 1 : x.kind == Tok::rparen ? -1 : 0;
          text += x.text + " ";
        } while (depth > 0);
        try {
          t.coef *= Scalar::parse(text);
        } catch (const ScalarSyntaxError& e) {
          fail_at(tk.col, SeErrorKind::syntax, e.what());
          return false;
        }
      } else if (tk.kind == Tok::number) {
        std::string text = next().text;
        if (peek().kind == Tok::ident && peek().text == "i") text += " " + next().text;
        try {
          Scalar s = Scalar::parse(text);
          if (s.is_zero() && text == "0") zero_literal = true;
          t.coef *= s;
        } catch (const ScalarSyntaxError& e) {
          fail_at(tk.col, SeErrorKind::syntax, e.what());
          return false;
        }
      } else if (tk.kind == Tok::ident && tk.text == "i") {
        next();
        t.coef *= Scalar::i();
      } else if (tk.kind == Tok::ident && is_param(tk.text)) {
        if (t.param) {
          fail(SeErrorKind::nonlinear_parameter, "term multiplies parameters '" + *t.param + "' and '" + tk.text + "'");
          return false;
        }
        t.param = next().text;
      } else if (tk.kind == Tok::ident) {
        if (have_monomial) {
          fail(SeErrorKind::syntax, "a term may contain only one wedge monomial");
          return false;
        }
        have_monomial = true;
        for (;;) {
          const Token& g = peek();
          if (g.kind != Tok::ident) {
            fail(SeErrorKind::syntax, "expected a generator after '^'");
            return false;
          }
          next();
          auto l = letter(g.text);
          if (!l) {
            if (is_param(g.text))
              fail_at(g.col, SeErrorKind::nonlinear_parameter, "parameter '" + g.text + "' used inside a monomial");
            else
              fail_at(g.col, SeErrorKind::unknown_generator, "unknown generator '" + g.text + "'");
            return false;
          }
          t.monomial.push_back(*l);
          if (peek().kind != Tok::caret) break;
          next();
        }
      } else {
        fail(SeErrorKind::syntax, tk.kind == Tok::end ? "expected a term" : "unexpected '" + tk.text + "'");
        return false;
      }
      if (peek().kind != Tok::star) break;
      next();
    }
    if (!have_monomial) {
      if (zero_literal && !t.param && t.coef.is_zero()) return true;  // `0`
      fail_at(t.col, SeErrorKind::bidegree_violation, "term has no wedge monomial (degree 0)");
      return false;
    }
    int holo = 0, anti = 0;
    for (auto l : t.monomial) (l.conj ? anti : holo)++;
    if (!((holo == 2 && anti == 0) || (holo == 1 && anti == 1))) {
      fail_at(t.col, SeErrorKind::bidegree_violation,
              "monomial has bidegree (" + std::to_string(holo) + "," + std::to_string(anti) +
                  "); only (2,0) and (1,1) are allowed");
      return false;
    }
    if (negative) t.coef = -t.coef;
    terms.push_back(std::move(t));
    return true;
  }

  const Line& line_;
  std::size_t pos_;
  const StructureEquations& se_;
  std::vector<SeError>& errors_;
};

bool is_identifier(const std::string& s) {
  return !s.empty() && ident_start(s[0]) && std::all_of(s.begin(), s.end(), ident_char);
}

}  // namespace

StructureEquations parse_se(std::string_view text) {
  std::vector<SeError> errors;
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line l{number, {}, raw};
    if (tokenize(raw, number, l.tokens, errors) && l.tokens.size() > 1) lines.push_back(std::move(l));
    start = end + 1;
  }

  StructureEquations se;
  bool have_dim = false;
  std::vector<const Line*> d_lines;
  std::set<std::string> seen;

  // First pass: dim, params and the generator list (order of d lines).
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    const std::string& head = t[0].text;
    if (t[0].kind == Tok::ident && head == "dim") {
      if (have_dim) errors.push_back({l.number, t[0].col, SeErrorKind::syntax, "duplicate 'dim'"});
      if (t.size() != 3 || t[1].kind != Tok::number || t[1].text.find('/') != std::string::npos) {
        errors.push_back({l.number, t[0].col, SeErrorKind::syntax, "expected 'dim <n>'"});
        continue;
      }
      se.n = std::stoi(t[1].text);
      if (se.n < 1 || se.n > 6)
        errors.push_back({l.number, t[1].col, SeErrorKind::syntax, "dim must be between 1 and 6"});
      if (!d_lines.empty())
        errors.push_back({l.number, t[0].col, SeErrorKind::syntax, "'dim' must precede all d lines"});
      have_dim = true;
    } else if (t[0].kind == Tok::ident && head == "param") {
      if (t.size() < 3 || t[1].kind != Tok::ident) {
        errors.push_back({l.number, t[0].col, SeErrorKind::syntax, "expected 'param <name> [= <rational>]'"});
        continue;
      }
      const std::string& name = t[1].text;
      if (name == "i" || se.param_defaults.count(name)) {
        errors.push_back({l.number, t[1].col, SeErrorKind::syntax, "parameter '" + name + "' redeclared or reserved"});
        continue;
      }
      std::optional<Rational> value;
      if (t[2].kind == Tok::equals) {
        std::string r;
        for (std::size_t k = 3; k + 1 < t.size(); ++k) r += t[k].text;
        try {
          value = parse_rational(r);
        } catch (const ScalarSyntaxError& e) {
          errors.push_back({l.number, t[2].col, SeErrorKind::syntax, e.what()});
          continue;
        }
      } else if (t[2].kind != Tok::end) {
        errors.push_back({l.number, t[2].col, SeErrorKind::syntax, "expected '=' after parameter name"});
        continue;
      }
      se.param_names.push_back(name);
      se.param_defaults[name] = value;
    } else if (t[0].kind == Tok::ident && head == "d") {
      if (!have_dim) errors.push_back({l.number, t[0].col, SeErrorKind::syntax, "'dim' must precede all d lines"});
      if (t.size() < 4 || t[1].kind != Tok::ident || t[2].kind != Tok::equals) {
        errors.push_back({l.number, t[0].col, SeErrorKind::syntax, "expected 'd <generator> = <terms>'"});
        continue;
      }
      const std::string& g = t[1].text;
      if (g == "i" || !is_identifier(g) || g.find("bar") != std::string::npos) {
        errors.push_back({l.number, t[1].col, SeErrorKind::syntax, "invalid generator name '" + g + "'"});
        continue;
      }
      if (!seen.insert(g).second) {
        errors.push_back({l.number, t[1].col, SeErrorKind::syntax, "second d line for '" + g + "'"});
        continue;
      }
      se.generators.push_back(g);
      d_lines.push_back(&l);
    } else {
      errors.push_back({l.number, t[0].col, SeErrorKind::syntax, "unrecognized line starting with '" + head + "'"});
    }
  }
  for (const auto& g : se.generators)
    if (se.param_defaults.count(g))
      errors.push_back({0, 0, SeErrorKind::syntax, "name '" + g + "' is both a generator and a parameter"});

  if (have_dim && static_cast<int>(se.generators.size()) != se.n) {
    if (static_cast<int>(se.generators.size()) < se.n)
      errors.push_back({0, 0, SeErrorKind::missing_equation,
                        "dim " + std::to_string(se.n) + " declares " + std::to_string(se.n) + " generators but only " +
                            std::to_string(se.generators.size()) + " d lines are given"});
    else
      errors.push_back({0, 0, SeErrorKind::syntax,
                        "more d lines (" + std::to_string(se.generators.size()) + ") than dim " + std::to_string(se.n)});
  }
  if (!have_dim) errors.push_back({0, 0, SeErrorKind::syntax, "missing 'dim <n>'"});

  // Second pass: right-hand sides, now that every generator name is known.
  se.differentials.resize(se.generators.size());
  for (std::size_t k = 0; k < d_lines.size(); ++k) {
    RhsParser rp(*d_lines[k], 3, se, errors);
    rp.parse(se.differentials[k]);
  }

  if (!errors.empty()) throw SeParseError(std::move(errors));
  return se;
}

ParamAssignment resolve_params(const StructureEquations& se, const ParamAssignment& overrides) {
  std::vector<SeError> errors;
  ParamAssignment out;
  for (const auto& [name, value] : overrides)
    if (!se.param_defaults.count(name))
      errors.push_back({0, 0, SeErrorKind::unknown_parameter, "no parameter named '" + name + "' is declared"});
  for (const auto& name : se.param_names) {
    if (auto it = overrides.find(name); it != overrides.end())
      out[name] = it->second;
    else if (const auto& def = se.param_defaults.at(name))
      out[name] = *def;
    else
      errors.push_back({0, 0, SeErrorKind::unknown_parameter, "parameter '" + name + "' has no value"});
  }
  if (!errors.empty()) throw SeParseError(std::move(errors));
  return out;
}

std::pair<std::string, Rational> parse_param_override(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw InputError("parameter override '" + std::string(text) + "' is not of the form name=rational");
  try {
    return {std::string(text.substr(0, eq)), parse_rational(text.substr(eq + 1))};
  } catch (const ScalarSyntaxError& e) {
    throw InputError("parameter override '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace ddlab
