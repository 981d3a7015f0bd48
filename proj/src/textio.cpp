// Copyright 2026 The adtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adtlab/textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "adtlab/errors.hpp"

namespace adtlab {

namespace {

// --- Lexer --------------------------------------------------------------------

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourceSpan pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  auto word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance();
      continue;
    }
    Token t;
    t.span = pos;
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      t.kind = Tok::Number;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text.push_back(src[i]);
        advance();
      }
      if (i < src.size() && word_char(src[i])) {
        throw ParseError(t.span, "malformed number");
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      t.kind = Tok::Ident;
      while (i < src.size() && word_char(src[i])) {
        t.text.push_back(src[i]);
        advance();
      }
    } else if (std::string_view("()[]{},&|!~<.").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text.push_back(c);
      advance();
    } else {
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.span = pos;
  out.push_back(end);
  return out;
}

class Cursor {
 public:
  Cursor(std::string_view src, const PropSet& props)
      : toks_(tokenize(src)), props_(props) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_punct(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Punct && t.text[0] == c;
  }
  bool at_ident(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Ident && t.text == s;
  }
  bool accept(char c) {
    if (!at_punct(c)) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  Token expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return next();
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.span, msg + ", found " + found);
  }

  std::size_t prop(const Token& t) const {
    auto idx = props_.index_of(t.text);
    if (!idx) throw ParseError(t.span, "unknown proposition '" + t.text + "'");
    return *idx;
  }

  // "{" [ident ("," ident)*] "}"
  Valuation valuation() {
    const SourceSpan at = peek().span;
    expect('{');
    Valuation v;
    std::set<std::size_t> seen;
    if (!at_punct('}')) {
      do {
        Token t = expect_ident("a proposition");
        const std::size_t p = prop(t);
        if (!seen.insert(p).second) {
          throw ParseError(t.span, "duplicate proposition '" + t.text + "'");
        }
        v = v.with(p);
      } while (accept(','));
    }
    if (!accept('}')) {
      throw ParseError(at, "malformed set literal");
    }
    return v;
  }

  const PropSet& props() const { return props_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const PropSet& props_;
};

// --- Propositional formulas ---------------------------------------------------

Formula formula_or(Cursor& c);

Formula formula_atom(Cursor& c) {
  if (c.accept('!')) return Formula::negation(formula_atom(c));
  if (c.accept('(')) {
    Formula f = formula_or(c);
    c.expect(')');
    return f;
  }
  if (c.peek().kind != Tok::Ident) c.fail("expected a formula");
  Token t = c.next();
  if (t.text == "true") return Formula::top();
  if (t.text == "false") return Formula::bottom();
  return Formula::var(c.prop(t));
}

Formula formula_and(Cursor& c) {
  Formula f = formula_atom(c);
  while (c.accept('&')) f = Formula::conjunction(f, formula_atom(c));
  return f;
}

Formula formula_or(Cursor& c) {
  Formula f = formula_and(c);
  while (c.accept('|')) f = Formula::disjunction(f, formula_and(c));
  return f;
}

// --- Trees --------------------------------------------------------------------

std::size_t nat(Cursor& c) {
  if (c.peek().kind != Tok::Number) c.fail("expected a natural number");
  Token t = c.next();
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(t.span, "number out of range");
  }
  return n;
}

Adt adt(Cursor& c);

std::vector<Adt> adt_args(Cursor& c) {
  c.expect('(');
  std::vector<Adt> kids{adt(c)};
  while (c.accept(',')) kids.push_back(adt(c));
  c.expect(')');
  return kids;
}

std::vector<Adt> adt_args(Cursor& c, const Token& head, std::size_t arity) {
  std::vector<Adt> kids = adt_args(c);
  if (kids.size() != arity) {
    throw ParseError(head.span, head.text + " takes " + std::to_string(arity) +
                                    " argument" + (arity == 1 ? "" : "s") +
                                    ", got " + std::to_string(kids.size()));
  }
  return kids;
}

Adt adt(Cursor& c) {
  if (c.accept('[')) {
    Formula f = formula_or(c);
    c.expect(']');
    return Adt::leaf(f);
  }
  if (c.peek().kind != Tok::Ident) c.fail("expected a tree");
  const Token head = c.next();
  const std::string& k = head.text;
  if (k == "EPS") return Adt::eps();
  if (k == "TOP") return Adt::leaf(Formula::top());
  if (k == "ETRUE") return etrue();
  if (k == "OR") return Adt::or_node(adt_args(c));
  if (k == "SAND") return Adt::sand_node(adt_args(c));
  if (k == "AND") return Adt::and_node(adt_args(c));
  if (k == "C") {
    auto kids = adt_args(c, head, 2);
    return Adt::counter(kids[0], kids[1]);
  }
  if (k == "CAP") {
    auto kids = adt_args(c, head, 2);
    return intersection_of(kids[0], kids[1]);
  }
  if (k == "NOT") return complement_of(adt_args(c, head, 1)[0]);
  if (k == "ALLB") return within_any(adt_args(c, head, 1)[0]);
  if (k == "ALLL") return preceded_by_any(adt_args(c, head, 1)[0]);
  if (k == "ALLR") return followed_by_any(adt_args(c, head, 1)[0]);
  if (k == "STRICT") {
    c.expect('(');
    Formula f = formula_or(c);
    c.expect(')');
    return strict(f);
  }
  if (k == "GE" || k == "LE" || k == "EQ") {
    c.expect('(');
    const SourceSpan at = c.peek().span;
    const std::size_t n = nat(c);
    c.expect(')');
    if (n == 0) throw ParseError(at, k + " needs a positive length");
    const LengthKind kind = k == "GE"   ? LengthKind::AtLeast
                            : k == "LE" ? LengthKind::AtMost
                                        : LengthKind::Exactly;
    return build_length(kind, n);
  }
  throw ParseError(head.span, "unknown operator '" + k + "'");
}

// --- First-order formulas -----------------------------------------------------

bool fo_reserved(std::string_view s) {
  return s == "E" || s == "A" || s == "letter" || s == "true" || s == "false";
}

std::string fo_variable(Cursor& c) {
  Token t = c.expect_ident("a variable");
  if (fo_reserved(t.text)) {
    throw ParseError(t.span, "'" + t.text + "' is reserved");
  }
  return t.text;
}

FoFormula fo_or(Cursor& c);

FoFormula fo_unary(Cursor& c) {
  if (c.accept('~')) return FoFormula::negation(fo_unary(c));
  if ((c.at_ident("E") || c.at_ident("A")) && c.peek(1).kind == Tok::Ident) {
    const bool exists = c.next().text == "E";
    std::string x = fo_variable(c);
    c.expect('.');
    FoFormula body = fo_unary(c);
    return exists ? FoFormula::exists(x, body) : FoFormula::forall(x, body);
  }
  if (c.accept('(')) {
    FoFormula f = fo_or(c);
    c.expect(')');
    return f;
  }
  if (c.at_ident("true")) {
    c.next();
    return FoFormula::truth();
  }
  if (c.at_ident("false")) {
    c.next();
    return FoFormula::falsity();
  }
  if (c.at_ident("letter")) {
    c.next();
    c.expect('(');
    Valuation v = c.valuation();
    c.expect(',');
    std::string x = fo_variable(c);
    c.expect(')');
    return FoFormula::letter(v, x);
  }
  std::string x = fo_variable(c);
  c.expect('<');
  std::string y = fo_variable(c);
  return FoFormula::less(x, y);
}

FoFormula fo_and(Cursor& c) {
  FoFormula f = fo_unary(c);
  while (c.accept('&')) f = FoFormula::conjunction(f, fo_unary(c));
  return f;
}

FoFormula fo_or(Cursor& c) {
  FoFormula f = fo_and(c);
  while (c.accept('|')) f = FoFormula::disjunction(f, fo_and(c));
  return f;
}

// --- Expressions --------------------------------------------------------------

Sere sere_or(Cursor& c);

Sere sere_unary(Cursor& c) {
  if (c.accept('!')) return Sere::complement(sere_unary(c));
  if (c.accept('(')) {
    Sere e = sere_or(c);
    c.expect(')');
    return e;
  }
  if (c.at_punct('{')) return Sere::letter(c.valuation());
  if (c.peek().kind == Tok::Number && c.peek().text == "0") {
    c.next();
    return Sere::empty();
  }
  if (c.at_ident("eps")) {
    c.next();
    return Sere::eps();
  }
  c.fail("expected an expression");
}

Sere sere_cat(Cursor& c) {
  Sere e = sere_unary(c);
  while (c.accept('.')) e = Sere::concat(e, sere_unary(c));
  return e;
}

Sere sere_and(Cursor& c) {
  Sere e = sere_cat(c);
  while (c.accept('&')) e = Sere::inter(e, sere_cat(c));
  return e;
}

Sere sere_or(Cursor& c) {
  Sere e = sere_and(c);
  while (c.accept('|')) e = Sere::union_of(e, sere_and(c));
  return e;
}

// --- Rendering ----------------------------------------------------------------

// Binding strength of infix forms; atoms bind tightest.
constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kCat = 3;
constexpr int kPrefix = 4;
constexpr int kAtom = 5;

// Left-associative parsing means a right operand at the same strength needs
// parentheses and a left one does not.
std::string wrap(const std::string& s, int prec, int outer, bool right) {
  return prec < outer || (right && prec == outer) ? "(" + s + ")" : s;
}

int formula_prec(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Or:
      return kOr;
    case Formula::Kind::And:
      return kAnd;
    case Formula::Kind::Not:
      return kPrefix;
    default:
      return kAtom;
  }
}

std::string formula_text(const Formula& f, const PropSet& props) {
  auto operand = [&](const Formula& x, int outer, bool right) {
    return wrap(formula_text(x, props), formula_prec(x), outer, right);
  };
  switch (f.kind()) {
    case Formula::Kind::True:
      return "true";
    case Formula::Kind::False:
      return "false";
    case Formula::Kind::Var:
      return props.name(f.prop());
    case Formula::Kind::Not:
      return "!" + operand(f.lhs(), kPrefix, false);
    case Formula::Kind::And:
      return operand(f.lhs(), kAnd, false) + " & " + operand(f.rhs(), kAnd, true);
    case Formula::Kind::Or:
      return operand(f.lhs(), kOr, false) + " | " + operand(f.rhs(), kOr, true);
  }
  return "";
}

int fo_prec(const FoFormula& f) {
  switch (f.kind()) {
    case FoFormula::Kind::Or:
      return kOr;
    case FoFormula::Kind::And:
      return kAnd;
    case FoFormula::Kind::Not:
    case FoFormula::Kind::Exists:
    case FoFormula::Kind::Forall:
      return kPrefix;
    default:
      return kAtom;
  }
}

std::string fo_text(const FoFormula& f, const PropSet& props) {
  auto operand = [&](const FoFormula& x, int outer, bool right) {
    return wrap(fo_text(x, props), fo_prec(x), outer, right);
  };
  switch (f.kind()) {
    case FoFormula::Kind::True:
      return "true";
    case FoFormula::Kind::False:
      return "false";
    case FoFormula::Kind::Less:
      return f.var() + " < " + f.var2();
    case FoFormula::Kind::Letter:
      return "letter(" + render_valuation(f.valuation(), props) + ", " + f.var() + ")";
    case FoFormula::Kind::Not: {
      const FoFormula& x = f.lhs();
      // ~x < y parses fine but reads badly.
      if (x.kind() == FoFormula::Kind::Less) return "~(" + fo_text(x, props) + ")";
      return "~" + operand(x, kPrefix, false);
    }
    case FoFormula::Kind::And:
      return operand(f.lhs(), kAnd, false) + " & " + operand(f.rhs(), kAnd, true);
    case FoFormula::Kind::Or:
      return operand(f.lhs(), kOr, false) + " | " + operand(f.rhs(), kOr, true);
    case FoFormula::Kind::Exists:
      return "E " + f.var() + ". (" + fo_text(f.lhs(), props) + ")";
    case FoFormula::Kind::Forall:
      return "A " + f.var() + ". (" + fo_text(f.lhs(), props) + ")";
  }
  return "";
}

int sere_prec(const Sere& e) {
  switch (e.kind()) {
    case Sere::Kind::Union:
      return kOr;
    case Sere::Kind::Inter:
      return kAnd;
    case Sere::Kind::Concat:
      return kCat;
    case Sere::Kind::Compl:
      return kPrefix;
    default:
      return kAtom;
  }
}

std::string sere_text(const Sere& e, const PropSet& props) {
  auto operand = [&](const Sere& x, int outer, bool right) {
    return wrap(sere_text(x, props), sere_prec(x), outer, right);
  };
  switch (e.kind()) {
    case Sere::Kind::Empty:
      return "0";
    case Sere::Kind::Eps:
      return "eps";
    case Sere::Kind::Letter:
      return render_valuation(e.valuation(), props);
    case Sere::Kind::Compl:
      return "!" + operand(e.lhs(), kPrefix, false);
    case Sere::Kind::Concat:
      return operand(e.lhs(), kCat, false) + "." + operand(e.rhs(), kCat, true);
    case Sere::Kind::Inter:
      return operand(e.lhs(), kAnd, false) + " & " + operand(e.rhs(), kAnd, true);
    case Sere::Kind::Union:
      return operand(e.lhs(), kOr, false) + " | " + operand(e.rhs(), kOr, true);
  }
  return "";
}

void adt_text(const Adt& t, const PropSet& props, std::string& out) {
  switch (t.kind()) {
    case Adt::Kind::Eps:
      out += "EPS";
      return;
    case Adt::Kind::Leaf:
      out += "[" + formula_text(t.formula(), props) + "]";
      return;
    case Adt::Kind::Or:
      out += "OR(";
      break;
    case Adt::Kind::Sand:
      out += "SAND(";
      break;
    case Adt::Kind::And:
      out += "AND(";
      break;
    case Adt::Kind::Counter:
      out += "C(";
      break;
  }
  bool first = true;
  for (const Adt& c : t.children()) {
    if (!first) out += ", ";
    first = false;
    adt_text(c, props, out);
  }
  out += ")";
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

// --- Entry points -------------------------------------------------------------

Adt parse_adt(std::string_view text, const PropSet& props) {
  Cursor c(text, props);
  Adt t = adt(c);
  c.expect_end();
  return t;
}

Formula parse_formula(std::string_view text, const PropSet& props) {
  Cursor c(text, props);
  Formula f = formula_or(c);
  c.expect_end();
  return f;
}

FoFormula parse_fo(std::string_view text, const PropSet& props) {
  Cursor c(text, props);
  FoFormula f = fo_or(c);
  c.expect_end();
  return f;
}

Sere parse_sere(std::string_view text, const PropSet& props) {
  Cursor c(text, props);
  Sere e = sere_or(c);
  c.expect_end();
  return e;
}

Valuation parse_valuation(std::string_view text, const PropSet& props) {
  Cursor c(text, props);
  Valuation v = c.valuation();
  c.expect_end();
  return v;
}

TraceFile parse_trace_file(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  std::size_t row = 0;
  auto is_comment = [](std::string_view l) {
    l = trim(l);
    return !l.empty() && l.front() == '#';
  };
  while (row < lines.size() && (trim(lines[row]).empty() || is_comment(lines[row]))) {
    ++row;
  }
  if (row == lines.size()) throw ParseError({1, 1}, "missing 'props:' header");

  std::string_view header = trim(lines[row]);
  if (header.substr(0, 6) != "props:") {
    throw ParseError({row + 1, 1}, "expected 'props:' header");
  }
  std::vector<std::string> names;
  {
    std::string_view rest = header.substr(6);
    if (auto hash = rest.find('#'); hash != std::string_view::npos) {
      rest = rest.substr(0, hash);
    }
    rest = trim(rest);
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view name = trim(rest.substr(0, comma));
      if (!is_identifier(name)) {
        throw ParseError({row + 1, 1}, "malformed proposition list");
      }
      names.emplace_back(name);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      if (trim(rest).empty()) {
        throw ParseError({row + 1, 1}, "malformed proposition list");
      }
    }
  }
  TraceFile out;
  try {
    out.props = PropSet(names);
  } catch (const InvalidArgument& e) {
    throw ParseError({row + 1, 1}, e.what());
  }

  Trace current;
  bool open = false;
  for (++row; row < lines.size(); ++row) {
    std::string_view line = trim(lines[row]);
    if (is_comment(line)) continue;
    if (line.empty()) {
      out.traces.push_back(std::move(current));
      current = Trace();
      open = false;
      continue;
    }
    try {
      current.push_back(parse_valuation(line, out.props));
    } catch (const ParseError& e) {
      // Re-anchor the single-line position to the file.
      throw ParseError({row + 1, e.span().column}, e.message());
    }
    open = true;
  }
  if (open) out.traces.push_back(std::move(current));
  return out;
}

std::vector<std::string> collect_props(std::string_view text, Dialect dialect) {
  static const std::set<std::string, std::less<>> kTreeWords{
      "EPS", "OR",    "SAND", "AND", "C",    "GE",   "LE",   "EQ",  "TOP",
      "ETRUE", "NOT", "CAP",  "STRICT", "ALLB", "ALLL", "ALLR", "true", "false"};
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  std::vector<Token> toks = tokenize(text);
  if (dialect == Dialect::Adt) {
    // Inside a leaf or STRICT(...) every identifier is a proposition; outside,
    // identifiers are operator keywords.
    int bracket = 0;
    int strict_paren = 0;
    bool after_strict = false;
    for (const Token& t : toks) {
      const bool in_formula = bracket > 0 || strict_paren > 0;
      if (t.kind == Tok::Ident) {
        if (in_formula) {
          if (t.text != "true" && t.text != "false") add(t.text);
        } else if (kTreeWords.count(t.text) == 0) {
          add(t.text);
        }
        after_strict = !in_formula && t.text == "STRICT";
        continue;
      }
      if (t.kind == Tok::Punct) {
        const char c = t.text[0];
        if (c == '[') ++bracket;
        if (c == ']' && bracket > 0) --bracket;
        if (c == '(' && (after_strict || strict_paren > 0)) ++strict_paren;
        if (c == ')' && strict_paren > 0) --strict_paren;
      }
      after_strict = false;
    }
    return out;
  }
  bool in_braces = false;
  for (const Token& t : toks) {
    if (t.kind == Tok::Punct && t.text == "{") in_braces = true;
    if (t.kind == Tok::Punct && t.text == "}") in_braces = false;
    if (in_braces && t.kind == Tok::Ident) add(t.text);
  }
  return out;
}

std::string render(const Adt& t, const PropSet& props) {
  check_alphabet(t, props);
  std::string out;
  adt_text(t, props, out);
  return out;
}

std::string render(const Formula& f, const PropSet& props) {
  if (f.prop_bound() > props.size()) {
    throw AlphabetMismatch("formula mentions a proposition outside the set");
  }
  return formula_text(f, props);
}

std::string render(const FoFormula& f, const PropSet& props) {
  if (prop_bound(f) > props.size()) {
    throw AlphabetMismatch("formula mentions a proposition outside the set");
  }
  return fo_text(f, props);
}

std::string render(const Sere& e, const PropSet& props) {
  if (prop_bound(e) > props.size()) {
    throw AlphabetMismatch("expression mentions a proposition outside the set");
  }
  return sere_text(e, props);
}

std::string render_valuation(Valuation v, const PropSet& props) {
  if (!props.contains(v)) throw AlphabetMismatch("letter outside the alphabet");
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < props.size(); ++p) {
    if (!v.contains(p)) continue;
    if (!first) out += ",";
    first = false;
    out += props.name(p);
  }
  return out + "}";
}

std::string render(const Trace& t, const PropSet& props) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += "\n";
    out += render_valuation(t[i], props);
  }
  return out;
}

std::string render_trace_file(const PropSet& props,
                              const std::vector<Trace>& traces) {
  std::string out = "props: ";
  for (std::size_t p = 0; p < props.size(); ++p) {
    if (p > 0) out += ",";
    out += props.name(p);
  }
  out += "\n";
  for (const Trace& t : traces) {
    if (!t.empty()) out += render(t, props) + "\n";
    out += "\n";
  }
  return out;
}

}  // namespace adtlab
