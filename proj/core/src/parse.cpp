#include "affvir/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace affvir {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         (detail.empty() ? "expected " + join_expected(expected) : detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

struct Pos {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;
};

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_.offset < text_.size()) {
      if (!std::isspace(static_cast<unsigned char>(text_[pos_.offset]))) return;
      advance();
    }
  }
  bool at_end() const { return pos_.offset >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_.offset]; }
  void advance() {
    if (!std::isspace(static_cast<unsigned char>(text_[pos_.offset]))) last_token_line_ = pos_.line;
    if (text_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }
  const Pos& pos() const { return pos_; }
  /// Line of the most recently consumed non-space character.
  int last_token_line() const { return last_token_line_; }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = "") const {
    throw ParseError(pos_.line, pos_.column, std::move(expected), detail);
  }
  [[noreturn]] void fail_at(const Pos& p, std::vector<std::string> expected, const std::string& detail) const {
    throw ParseError(p.line, p.column, std::move(expected), detail);
  }

  std::optional<std::string> identifier() {
    skip_space();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += peek();
      advance();
    }
    return out;
  }
  std::optional<Int> integer() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Int(digits);
  }
  long signed_small_integer() {
    bool negative = accept('-');
    Pos at = pos_;
    auto v = integer();
    if (!v) fail({"integer"});
    if (!v->fits_slong_p()) fail_at(at, {"integer"}, "integer out of range");
    return negative ? -v->get_si() : v->get_si();
  }

 private:
  const std::string& text_;
  Pos pos_;
  int last_token_line_ = 1;
};

/// Ring operations for one parse context.
template <class V>
struct Ops {
  std::function<std::optional<V>(const std::string& name, Cursor& cur, const Pos& at)> atom;
  std::function<std::optional<Scalar>(const V&)> as_scalar;
  std::function<V(const V&, long)> power;  // exponent >= 0
  std::vector<std::string> names;          // for error messages
};

template <class V>
class Parser {
 public:
  Parser(Cursor& cur, const Ops<V>& ops) : cur_(cur), ops_(ops) {}

  V expr() {
    cur_.skip_space();
    V acc;
    if (cur_.accept('-'))
      acc = V(Scalar(-1)) * term();
    else {
      cur_.accept('+');
      acc = term();
    }
    for (;;) {
      if (cur_.accept('+'))
        acc = acc + term();
      else if (cur_.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

 private:
  V term() {
    V acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc = acc * factor();
      } else {
        cur_.skip_space();
        Pos at = cur_.pos();
        if (!cur_.accept('/')) return acc;
        V d = factor();
        auto s = ops_.as_scalar(d);
        if (!s) cur_.fail_at(at, {"scalar divisor"}, "division by a non-scalar");
        if (s->is_zero()) cur_.fail_at(at, {"nonzero divisor"}, "division by zero");
        acc = acc * V(s->inverse());
      }
    }
  }

  V factor() {
    V base = atom();
    cur_.skip_space();
    Pos at = cur_.pos();
    if (!cur_.accept('^')) return base;
    long e = cur_.signed_small_integer();
    if (e >= 0) return ops_.power(base, e);
    auto s = ops_.as_scalar(base);
    if (!s) cur_.fail_at(at, {"nonnegative exponent"}, "negative exponent on a non-scalar");
    if (s->is_zero()) cur_.fail_at(at, {"nonzero base"}, "division by zero");
    return V(s->pow(e));
  }

  V atom() {
    cur_.skip_space();
    Pos at = cur_.pos();
    if (cur_.accept('(')) {
      V inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (auto n = cur_.integer()) return V(Scalar(Rat(*n)));
    if (auto name = cur_.identifier()) {
      if (auto v = ops_.atom(*name, cur_, at)) return *v;
      cur_.fail_at(at, ops_.names, "unknown name '" + *name + "'");
    }
    std::vector<std::string> expected = {"integer", "'('"};
    expected.insert(expected.end(), ops_.names.begin(), ops_.names.end());
    cur_.fail(expected);
  }

  Cursor& cur_;
  const Ops<V>& ops_;
};

std::optional<Scalar> param_atom(const std::string& name) {
  if (name.size() != 1) return std::nullopt;
  if (auto p = param_from_symbol(name[0])) return Scalar::param(*p);
  return std::nullopt;
}

const std::vector<std::string> kParamNames = {"L", "A", "B", "G"};

Ops<Scalar> scalar_ops() {
  Ops<Scalar> ops;
  ops.atom = [](const std::string& name, Cursor&, const Pos&) { return param_atom(name); };
  ops.as_scalar = [](const Scalar& s) { return std::optional<Scalar>(s); };
  ops.power = [](const Scalar& s, long e) { return s.pow(e); };
  ops.names = kParamNames;
  return ops;
}

Ops<SPoly> spoly_ops(const SVarNames& vars) {
  Ops<SPoly> ops;
  ops.atom = [vars](const std::string& name, Cursor&, const Pos&) -> std::optional<SPoly> {
    if (name == vars.s) return SPoly::s();
    if (name == vars.t) return SPoly::t();
    if (auto p = param_atom(name)) return SPoly(*p);
    return std::nullopt;
  };
  ops.as_scalar = [](const SPoly& p) -> std::optional<Scalar> {
    if (p.is_zero()) return Scalar(0);
    if (p.size() == 1 && p.terms().begin()->first == SExp{0, 0}) return p.terms().begin()->second;
    return std::nullopt;
  };
  ops.power = [](const SPoly& p, long e) { return p.pow(static_cast<unsigned>(e)); };
  ops.names = {vars.s, vars.t, "L", "A", "B", "G"};
  return ops;
}

Ops<EnvelopingElement> algebra_ops() {
  Ops<EnvelopingElement> ops;
  ops.atom = [](const std::string& name, Cursor& cur, const Pos&) -> std::optional<EnvelopingElement> {
    if (name == "c") return EnvelopingElement(Gen::c());
    if (name == "e" || name == "f" || name == "h" || name == "d") {
      cur.expect('[');
      long i = cur.signed_small_integer();
      cur.expect(']');
      switch (name[0]) {
        case 'e': return EnvelopingElement(Gen::e(i));
        case 'f': return EnvelopingElement(Gen::f(i));
        case 'h': return EnvelopingElement(Gen::h(i));
        default: return EnvelopingElement(Gen::d(i));
      }
    }
    if (auto p = param_atom(name)) return EnvelopingElement(*p);
    return std::nullopt;
  };
  ops.as_scalar = [](const EnvelopingElement& u) -> std::optional<Scalar> {
    if (u.is_zero()) return Scalar(0);
    if (u.size() == 1 && u.terms().begin()->first.empty()) return u.terms().begin()->second;
    return std::nullopt;
  };
  ops.power = [](const EnvelopingElement& u, long e) { return u.pow(static_cast<unsigned>(e)); };
  ops.names = {"e[i]", "f[i]", "h[i]", "d[i]", "c", "L", "A", "B", "G"};
  return ops;
}

template <class V>
V parse_whole(const std::string& text, const Ops<V>& ops) {
  Cursor cur(text);
  V out = Parser<V>(cur, ops).expr();
  cur.skip_space();
  if (!cur.at_end()) cur.fail({"operator", "end of input"});
  return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) { return parse_whole(text, scalar_ops()); }

SPoly parse_spoly(const std::string& text, const SVarNames& names) { return parse_whole(text, spoly_ops(names)); }

EnvelopingElement parse_algebra(const std::string& text) { return parse_whole(text, algebra_ops()); }

EFCandidate parse_candidate(const std::string& text) {
  Cursor cur(text);
  const auto sops = scalar_ops();
  const auto pops = spoly_ops(kCartanNames);
  const std::vector<std::string> keys = {"E0", "F0", "lambda", "gamma", "p"};
  std::optional<SPoly> e0, f0;
  std::optional<Scalar> lambda, gamma;
  std::optional<UniPoly> p;
  for (;;) {
    cur.skip_space();
    while (cur.accept(';')) cur.skip_space();
    if (cur.at_end()) break;
    Pos at = cur.pos();
    auto key = cur.identifier();
    if (!key) cur.fail(keys);
    cur.expect('=');
    auto duplicate = [&](bool seen) {
      if (seen) cur.fail_at(at, keys, "duplicate assignment to " + *key);
    };
    if (*key == "E0" || *key == "F0") {
      auto& slot = *key == "E0" ? e0 : f0;
      duplicate(slot.has_value());
      slot = Parser<SPoly>(cur, pops).expr();
    } else if (*key == "lambda" || *key == "gamma") {
      auto& slot = *key == "lambda" ? lambda : gamma;
      duplicate(slot.has_value());
      slot = Parser<Scalar>(cur, sops).expr();
    } else if (*key == "p") {
      duplicate(p.has_value());
      Pos value_at = cur.pos();
      SPoly poly = Parser<SPoly>(cur, pops).expr();
      if (poly.degree_s() > 0) cur.fail_at(value_at, {"polynomial in h0"}, "p must not depend on d0");
      p = poly.coeff_s(0);
    } else {
      cur.fail_at(at, keys, "unknown name '" + *key + "'");
    }
    cur.skip_space();
    if (cur.at_end()) break;
    if (!cur.accept(';') && cur.pos().line == cur.last_token_line()) cur.fail({"';'", "newline"});
  }
  if (!e0 || !f0 || !lambda) {
    std::vector<std::string> missing;
    if (!e0) missing.push_back("E0");
    if (!f0) missing.push_back("F0");
    if (!lambda) missing.push_back("lambda");
    cur.fail(missing, "missing " + join_expected(missing));
  }
  EFCandidate c;
  c.e0 = *e0;
  c.f0 = *f0;
  c.base.lambda = *lambda;
  if (gamma) c.base.gamma = *gamma;
  c.base.p = p;
  return c;
}

ModuleSpec parse_spec(const std::string& text) {
  Cursor cur(text);
  cur.skip_space();
  Pos at = cur.pos();
  auto name = cur.identifier();
  std::optional<Family> family;
  if (name) family = family_from_string(*name);
  if (!family) cur.fail_at(at, {"Omega", "Delta", "Theta"}, "expected Omega, Delta or Theta");
  cur.expect('(');
  const auto ops = scalar_ops();
  Scalar args[4];
  for (int i = 0; i < 4; ++i) {
    if (i) cur.expect(',');
    args[i] = Parser<Scalar>(cur, ops).expr();
  }
  cur.expect(')');
  cur.skip_space();
  if (!cur.at_end()) cur.fail({"end of input"});
  try {
    return ModuleSpec::make(*family, args[0], args[1], args[2], args[3]);
  } catch (const InvalidModuleSpec& e) {
    cur.fail_at(at, {"valid parameters"}, e.what());
  }
}

ParsedValue parse_expr(const std::string& text, ParseContext context) {
  switch (context) {
    case ParseContext::Scalar: return parse_scalar(text);
    case ParseContext::SPoly: return parse_spoly(text);
    case ParseContext::Algebra: return parse_algebra(text);
    case ParseContext::EFCandidate: return parse_candidate(text);
  }
  throw std::invalid_argument("parse_expr: unknown context");
}

}  // namespace affvir
