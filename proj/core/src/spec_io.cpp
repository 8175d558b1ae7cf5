#include "twistbench/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "twistbench/error.hpp"
#include "twistbench/suites.hpp"

namespace twistbench {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Shared lexing machinery. Both the .alg grammar and the formula syntax are
// lexed up front into a token vector, which makes backtracking (needed to
// disambiguate parenthesized terms from parenthesized formulas) a matter of
// saving an index.
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { Word, Quoted, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1, col = 1;
};

bool word_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

class Lexer {
 public:
  // `syms` lists the punctuation tokens, longest first.
  Lexer(const std::string& text, std::vector<std::string> syms,
        bool allow_dash_words)
      : text_(text), syms_(std::move(syms)), dash_words_(allow_dash_words) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char ch = text_[pos_];
      if (ch == '"') {
        t.kind = Token::Kind::Quoted;
        t.text = quoted();
      } else if (word_char(ch)) {
        t.kind = Token::Kind::Word;
        t.text = word();
      } else if (auto sym = symbol()) {
        t.kind = Token::Kind::Sym;
        t.text = *sym;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         line_, col_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string quoted() {
    int l = line_, c = col_;
    advance();  // opening quote
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
      out += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size() || text_[pos_] != '"')
      throw ParseError("unterminated quoted label", l, c);
    advance();  // closing quote
    return out;
  }

  std::string word() {
    std::string out;
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      bool dash = dash_words_ && ch == '-' &&
                  (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '>');
      if (!word_char(ch) && !dash) break;
      out += ch;
      advance();
    }
    return out;
  }

  std::optional<std::string> symbol() {
    for (const std::string& s : syms_) {
      if (text_.compare(pos_, s.size(), s) == 0) {
        for (size_t i = 0; i < s.size(); ++i) advance();
        return s;
      }
    }
    return std::nullopt;
  }

  const std::string& text_;
  std::vector<std::string> syms_;
  bool dash_words_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// Token cursor with one-symbol conveniences shared by both parsers.
class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[idx_]; }
  const Token& next() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }
  size_t mark() const { return idx_; }
  void rewind(size_t m) { idx_ = m; }

  bool at_sym(const std::string& s) const {
    return peek().kind == Token::Kind::Sym && peek().text == s;
  }
  bool at_word(const std::string& w) const {
    return peek().kind == Token::Kind::Word && peek().text == w;
  }
  bool eat_sym(const std::string& s) {
    if (!at_sym(s)) return false;
    next();
    return true;
  }
  void expect_sym(const std::string& s) {
    if (!eat_sym(s)) fail("expected '" + s + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::End
                          ? "end of input"
                          : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.line, t.col);
  }

 private:
  std::vector<Token> toks_;
  size_t idx_ = 0;
};

// ---------------------------------------------------------------------------
// .alg grammar
// ---------------------------------------------------------------------------

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> r = {"algebra", "elements", "covers",
                                          "op",      "const",    "kind"};
  return r;
}

const std::set<std::string>& known_kinds() {
  static const std::set<std::string> k = {"heyting", "godel",  "monadic-godel",
                                          "nelson",  "monadic-nelson", "raw"};
  return k;
}

bool at_label(const Cursor& cur) {
  if (cur.peek().kind == Token::Kind::Quoted) return true;
  return cur.peek().kind == Token::Kind::Word &&
         !reserved_words().count(cur.peek().text);
}

std::string take_label(Cursor& cur, const char* what) {
  if (!at_label(cur)) cur.fail(std::string("expected ") + what);
  return cur.next().text;
}

class SpecParser {
 public:
  explicit SpecParser(const std::string& text)
      : cur_(Lexer(text, {"{", "}", ":", ",", "->", "<", "(", ")"}, true)
                 .run()) {}

  AlgebraSpec parse() {
    expect_keyword("algebra");
    spec_.alg_line = last_line_;
    spec_.alg_col = last_col_;
    spec_.name = take_label(cur_, "an algebra name");
    cur_.expect_sym("{");
    parse_elements();
    parse_covers();
    while (cur_.at_word("op")) parse_op();
    while (cur_.at_word("const")) parse_const();
    parse_kind();
    cur_.expect_sym("}");
    if (cur_.peek().kind != Token::Kind::End)
      cur_.fail("expected end of input after '}'");
    return std::move(spec_);
  }

 private:
  void expect_keyword(const std::string& kw) {
    const Token& t = cur_.peek();
    if (!cur_.at_word(kw)) cur_.fail("expected '" + kw + "'");
    last_line_ = t.line;
    last_col_ = t.col;
    cur_.next();
  }

  int resolve(const std::string& label, int line, int col) const {
    auto it = element_index_.find(label);
    if (it == element_index_.end())
      throw ParseError("unknown label '" + label + "'", line, col);
    return it->second;
  }

  std::string resolved_label(const char* what) {
    const Token& t = cur_.peek();
    std::string l = take_label(cur_, what);
    resolve(l, t.line, t.col);
    return l;
  }

  void parse_elements() {
    expect_keyword("elements");
    cur_.expect_sym(":");
    while (at_label(cur_)) {
      const Token& t = cur_.peek();
      std::string l = cur_.next().text;
      if (element_index_.count(l))
        throw ParseError("duplicate element label '" + l + "'", t.line, t.col);
      element_index_[l] = static_cast<int>(spec_.elements.size());
      spec_.elements.push_back(std::move(l));
    }
    if (spec_.elements.empty()) cur_.fail("expected at least one element");
  }

  void parse_covers() {
    expect_keyword("covers");
    spec_.covers_line = last_line_;
    spec_.covers_col = last_col_;
    cur_.expect_sym(":");
    if (!at_label(cur_)) return;  // empty cover list (one-element algebra)
    while (true) {
      const Token& at = cur_.peek();
      std::string a = resolved_label("a label");
      cur_.expect_sym("<");
      std::string b = resolved_label("a label");
      if (a == b)
        throw ParseError("cycle: '" + a + "' < '" + b + "'", at.line, at.col);
      spec_.covers.emplace_back(std::move(a), std::move(b));
      if (!cur_.eat_sym(",")) return;
    }
  }

  void parse_op() {
    expect_keyword("op");
    OpDecl decl;
    decl.line = last_line_;
    decl.col = last_col_;
    const Token& nt = cur_.peek();
    if (nt.kind != Token::Kind::Word) cur_.fail("expected an operation name");
    decl.name = cur_.next().text;
    auto op = op_from_name(decl.name);
    if (!op)
      throw ParseError("unknown operation '" + decl.name + "'", nt.line,
                       nt.col);
    if (*op == Op::join || *op == Op::meet)
      throw ParseError("operation '" + decl.name +
                           "' is determined by the order and cannot be "
                           "declared",
                       nt.line, nt.col);
    if (*op == Op::hneg)
      throw ParseError("operation 'hneg' is always derived and cannot be "
                       "declared",
                       nt.line, nt.col);
    for (const OpDecl& d : spec_.ops)
      if (d.name == decl.name)
        throw ParseError("duplicate declaration of operation '" + decl.name +
                             "'",
                         nt.line, nt.col);
    decl.binary = op_is_binary(*op);
    cur_.expect_sym(":");
    std::set<std::vector<std::string>> seen;
    while (true) {
      OpMapping m;
      const Token& et = cur_.peek();
      if (decl.binary) {
        if (!cur_.eat_sym("("))
          cur_.fail("operation '" + decl.name +
                    "' is binary; expected (LABEL,LABEL)->LABEL");
        m.args.push_back(resolved_label("a label"));
        cur_.expect_sym(",");
        m.args.push_back(resolved_label("a label"));
        cur_.expect_sym(")");
      } else {
        if (cur_.at_sym("("))
          cur_.fail("operation '" + decl.name +
                    "' is unary; expected LABEL->LABEL");
        m.args.push_back(resolved_label("a label"));
      }
      cur_.expect_sym("->");
      m.value = resolved_label("a label");
      if (!seen.insert(m.args).second) {
        std::string key = m.args.size() == 1
                              ? "'" + m.args[0] + "'"
                              : "('" + m.args[0] + "','" + m.args[1] + "')";
        throw ParseError("duplicate mapping for " + key + " in operation '" +
                             decl.name + "'",
                         et.line, et.col);
      }
      decl.entries.push_back(std::move(m));
      if (!cur_.eat_sym(",")) break;
    }
    spec_.ops.push_back(std::move(decl));
  }

  void parse_const() {
    expect_keyword("const");
    int line = last_line_, col = last_col_;
    const Token& nt = cur_.peek();
    if (nt.kind != Token::Kind::Word) cur_.fail("expected a constant name");
    std::string name = cur_.next().text;
    if (!const_from_name(name))
      throw ParseError("unknown constant '" + name + "'", nt.line, nt.col);
    for (const auto& [n, v] : spec_.constants)
      if (n == name)
        throw ParseError("duplicate declaration of constant '" + name + "'",
                         nt.line, nt.col);
    cur_.expect_sym(":");
    std::string value = resolved_label("a label");
    spec_.constants.emplace_back(std::move(name), std::move(value));
    spec_.const_locs.emplace_back(line, col);
  }

  void parse_kind() {
    expect_keyword("kind");
    cur_.expect_sym(":");
    const Token& t = cur_.peek();
    if (t.kind != Token::Kind::Word) cur_.fail("expected a kind");
    std::string k = cur_.next().text;
    if (!known_kinds().count(k))
      throw ParseError("unknown kind '" + k + "'", t.line, t.col);
    spec_.kind = std::move(k);
  }

  Cursor cur_;
  AlgebraSpec spec_;
  std::map<std::string, int> element_index_;
  int last_line_ = 1, last_col_ = 1;
};

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

bool needs_quotes(const std::string& label) {
  if (label.empty() || reserved_words().count(label)) return true;
  for (char ch : label)
    if (!word_char(ch)) return true;
  return false;
}

std::string quoted_label(const std::string& label) {
  return needs_quotes(label) ? "\"" + label + "\"" : label;
}

// ---------------------------------------------------------------------------
// Formula syntax
// ---------------------------------------------------------------------------

const std::set<std::string>& formula_keywords() {
  static const std::set<std::string> k = {"forall", "exists", "not",
                                          "E",      "A",      "0",
                                          "1",      "c"};
  return k;
}

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text)
      : cur_(Lexer(text,
                   {"==>", "\\/", "/\\", "=>", "->", "<=", "~", "!", "(", ")",
                    "[", "]", ".", "=", "&", "|", "<"},
                   false)
                 .run()) {}

  Formula parse() {
    Formula f = formula();
    if (cur_.peek().kind != Token::Kind::End)
      cur_.fail("expected end of formula");
    return f;
  }

 private:
  Formula formula() {
    if (cur_.at_word("forall") || cur_.at_word("exists")) {
      bool universal = cur_.next().text == "forall";
      const Token& vt = cur_.peek();
      if (vt.kind != Token::Kind::Word || formula_keywords().count(vt.text))
        cur_.fail("expected a variable name");
      std::string var = cur_.next().text;
      std::optional<Formula> guard;
      if (cur_.eat_sym("[")) {
        guard = formula();
        cur_.expect_sym("]");
      }
      cur_.expect_sym(".");
      Formula body = formula();
      if (universal)
        return guard ? f_forall(var, std::move(*guard), std::move(body))
                     : f_forall(var, std::move(body));
      return guard ? f_exists(var, std::move(*guard), std::move(body))
                   : f_exists(var, std::move(body));
    }
    return implies_f();
  }

  Formula implies_f() {
    Formula l = or_f();
    if (cur_.eat_sym("==>")) return f_implies(std::move(l), implies_f());
    return l;
  }

  Formula or_f() {
    Formula l = and_f();
    while (cur_.eat_sym("|")) l = f_or(std::move(l), and_f());
    return l;
  }

  Formula and_f() {
    Formula l = atom_f();
    while (cur_.eat_sym("&")) l = f_and(std::move(l), atom_f());
    return l;
  }

  Formula atom_f() {
    if (cur_.at_word("not")) {
      cur_.next();
      return f_not(atom_f());
    }
    if (cur_.at_word("forall") || cur_.at_word("exists")) return formula();
    if (cur_.at_sym("(")) {
      // A '(' may open either a grouped formula or a parenthesized term;
      // try the formula reading and fall back on failure or when the
      // closing ')' is followed by more term syntax.
      size_t m = cur_.mark();
      cur_.next();
      try {
        Formula f = formula();
        cur_.expect_sym(")");
        static const std::set<std::string> term_cont = {"=",  "<=", "\\/",
                                                        "/\\", "=>", "->"};
        if (!(cur_.peek().kind == Token::Kind::Sym &&
              term_cont.count(cur_.peek().text)))
          return f;
      } catch (const ParseError&) {
      }
      cur_.rewind(m);
    }
    Term l = term();
    bool eq = true;
    if (cur_.eat_sym("=")) {
      eq = true;
    } else if (cur_.eat_sym("<=")) {
      eq = false;
    } else {
      cur_.fail("expected '=' or '<='");
    }
    Term r = term();
    return eq ? f_eq(std::move(l), std::move(r))
              : f_le(std::move(l), std::move(r));
  }

  Term term() { return imp_t(); }

  Term imp_t() {
    Term l = or_t();
    if (cur_.eat_sym("=>")) return tapp(Op::himp, {std::move(l), imp_t()});
    if (cur_.eat_sym("->")) return tapp(Op::nimp, {std::move(l), imp_t()});
    return l;
  }

  Term or_t() {
    Term l = and_t();
    while (cur_.eat_sym("\\/")) l = tapp(Op::join, {std::move(l), and_t()});
    return l;
  }

  Term and_t() {
    Term l = un_t();
    while (cur_.eat_sym("/\\")) l = tapp(Op::meet, {std::move(l), un_t()});
    return l;
  }

  Term un_t() {
    if (cur_.eat_sym("~")) return tapp(Op::neg, {un_t()});
    if (cur_.eat_sym("!")) return tapp(Op::hneg, {un_t()});
    if (cur_.at_word("E")) {
      cur_.next();
      return tapp(Op::exists, {un_t()});
    }
    if (cur_.at_word("A")) {
      cur_.next();
      return tapp(Op::forall, {un_t()});
    }
    return prim_t();
  }

  Term prim_t() {
    if (cur_.eat_sym("(")) {
      Term t = term();
      cur_.expect_sym(")");
      return t;
    }
    const Token& t = cur_.peek();
    if (t.kind != Token::Kind::Word) cur_.fail("expected a term");
    std::string w = cur_.next().text;
    if (w == "0") return tconst(ConstName::bot);
    if (w == "1") return tconst(ConstName::top);
    if (w == "c") return tconst(ConstName::center);
    if (formula_keywords().count(w))
      throw ParseError("unexpected '" + w + "' in a term", t.line, t.col);
    return tvar(std::move(w));
  }

  Cursor cur_;
};

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

json table_json(const Algebra& a, const UnaryTable& t) {
  json out = json::array();
  for (int v : t) out.push_back(a.label(v));
  return out;
}

json table_json(const Algebra& a, const BinaryTable& t) {
  json out = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (int v : row) r.push_back(a.label(v));
    out.push_back(std::move(r));
  }
  return out;
}

json algebra_json(const Algebra& a) {
  json j;
  j["name"] = a.name;
  j["elements"] = a.lat.poset.names;
  json leq = json::array();
  for (int i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < a.size(); ++k) row.push_back(a.le(i, k));
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  j["bot"] = a.label(a.bot());
  j["top"] = a.label(a.top());
  if (a.center) j["center"] = a.label(*a.center);
  json ops;
  ops["join"] = table_json(a, a.lat.join);
  ops["meet"] = table_json(a, a.lat.meet);
  if (a.himp) ops["himp"] = table_json(a, *a.himp);
  if (a.nimp) ops["nimp"] = table_json(a, *a.nimp);
  if (a.neg) ops["neg"] = table_json(a, *a.neg);
  if (a.hneg) ops["hneg"] = table_json(a, *a.hneg);
  if (a.exists) ops["exists"] = table_json(a, *a.exists);
  if (a.forall) ops["forall"] = table_json(a, *a.forall);
  j["ops"] = std::move(ops);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json witness_json(const Witness& w, const Algebra* labels) {
  auto value = [&](int v) -> json {
    if (labels) return labels->label(v);
    return v;
  };
  json j;
  if (!w.clause.empty()) j["clause"] = w.clause;
  json assign = json::array();
  for (const auto& [var, v] : w.assignment)
    assign.push_back(json::array({var, value(v)}));
  j["assignment"] = std::move(assign);
  if (w.lhs) j["lhs"] = value(*w.lhs);
  if (w.rhs) j["rhs"] = value(*w.rhs);
  return j;
}

int label_index(const Poset& p, const json& j, const char* where) {
  if (!j.is_string())
    throw Error(std::string("expected an element label in ") + where);
  int idx = p.index_of(j.get<std::string>());
  if (idx < 0)
    throw Error("unknown element label '" + j.get<std::string>() + "' in " +
                where);
  return idx;
}

UnaryTable unary_from_json(const Poset& p, const json& j, const char* name) {
  if (!j.is_array() || j.size() != static_cast<size_t>(p.size()))
    throw Error(std::string("table '") + name + "' has the wrong size");
  UnaryTable t;
  for (const json& e : j) t.push_back(label_index(p, e, name));
  return t;
}

BinaryTable binary_from_json(const Poset& p, const json& j, const char* name) {
  if (!j.is_array() || j.size() != static_cast<size_t>(p.size()))
    throw Error(std::string("table '") + name + "' has the wrong size");
  BinaryTable t;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != static_cast<size_t>(p.size()))
      throw Error(std::string("table '") + name + "' has a malformed row");
    std::vector<int> r;
    for (const json& e : row) r.push_back(label_index(p, e, name));
    t.push_back(std::move(r));
  }
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

AlgebraSpec parse_spec(const std::string& text) {
  return SpecParser(text).parse();
}

std::string write_spec(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "algebra " << quoted_label(spec.name) << " {\n";
  out << "  elements:";
  for (const std::string& e : spec.elements) out << ' ' << quoted_label(e);
  out << "\n  covers:";
  for (size_t i = 0; i < spec.covers.size(); ++i) {
    out << (i ? ", " : " ") << quoted_label(spec.covers[i].first) << '<'
        << quoted_label(spec.covers[i].second);
  }
  out << '\n';
  for (const OpDecl& d : spec.ops) {
    out << "  op " << d.name << ":";
    for (size_t i = 0; i < d.entries.size(); ++i) {
      if (i && i % 5 == 0) out << ",\n   ";
      else if (i) out << ',';
      const OpMapping& m = d.entries[i];
      out << ' ';
      if (d.binary)
        out << '(' << quoted_label(m.args[0]) << ',' << quoted_label(m.args[1])
            << ")->" << quoted_label(m.value);
      else
        out << quoted_label(m.args[0]) << "->" << quoted_label(m.value);
    }
    out << '\n';
  }
  for (const auto& [name, value] : spec.constants)
    out << "  const " << name << ": " << quoted_label(value) << '\n';
  out << "  kind: " << spec.kind << "\n}\n";
  return out.str();
}

AlgebraSpec spec_from_algebra(const Algebra& a, const std::string& kind) {
  if (!known_kinds().count(kind)) throw Error("unknown kind '" + kind + "'");
  AlgebraSpec spec;
  spec.name = a.name;
  spec.kind = kind;
  spec.elements = a.lat.poset.names;
  int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !a.le(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && a.le(i, k) && a.le(k, j)) covered = false;
      if (covered) spec.covers.emplace_back(a.label(i), a.label(j));
    }
  }
  bool heyting_family =
      kind == "heyting" || kind == "godel" || kind == "monadic-godel";
  auto unary_decl = [&](Op op, const UnaryTable& t) {
    OpDecl d;
    d.name = std::string(op_name(op));
    for (int i = 0; i < n; ++i)
      d.entries.push_back(OpMapping{{a.label(i)}, a.label(t[i])});
    spec.ops.push_back(std::move(d));
  };
  auto binary_decl = [&](Op op, const BinaryTable& t) {
    OpDecl d;
    d.name = std::string(op_name(op));
    d.binary = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d.entries.push_back(
            OpMapping{{a.label(i), a.label(j)}, a.label(t[i][j])});
    spec.ops.push_back(std::move(d));
  };
  // The Heyting implication of a suite-checked algebra is exactly the
  // relative pseudocomplement, so it can be left to re-derivation; for raw
  // specs nothing guarantees that, and the table is written out.
  if (a.himp && !heyting_family) binary_decl(Op::himp, *a.himp);
  if (a.nimp) binary_decl(Op::nimp, *a.nimp);
  if (a.neg) unary_decl(Op::neg, *a.neg);
  if (a.exists) unary_decl(Op::exists, *a.exists);
  bool forall_derived = a.nimp && a.neg && a.exists;
  if (a.forall && !forall_derived) unary_decl(Op::forall, *a.forall);
  if (a.center) spec.constants.emplace_back("center", a.label(*a.center));
  return spec;
}

Elaboration elaborate(const AlgebraSpec& spec, bool lenient) {
  if (!known_kinds().count(spec.kind))
    throw ParseError("unknown kind '" + spec.kind + "'", spec.alg_line,
                     spec.alg_col);
  Lattice lat;
  try {
    lat = derive_lattice(build_poset(spec.elements, spec.covers));
  } catch (const Error& e) {
    throw ParseError(e.what(), spec.covers_line, spec.covers_col);
  }
  int n = lat.size();

  // parse_spec resolves every reference, but a hand-built spec may not.
  auto idx = [&lat](const std::string& label, int line, int col) {
    int i = lat.poset.index_of(label);
    if (i < 0) throw ParseError("unknown label '" + label + "'", line, col);
    return i;
  };

  AlgebraInput in;
  bool has_himp = false, has_nimp = false;
  for (const OpDecl& d : spec.ops) {
    auto missing = [&](const std::string& at) -> ParseError {
      return ParseError("operation '" + d.name + "' is not total: no value " +
                            "for " + at,
                        d.line, d.col);
    };
    if (d.binary) {
      BinaryTable t(n, std::vector<int>(n, -1));
      for (const OpMapping& m : d.entries)
        t[idx(m.args[0], d.line, d.col)][idx(m.args[1], d.line, d.col)] =
            idx(m.value, d.line, d.col);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (t[i][j] < 0)
            throw missing("('" + lat.label(i) + "','" + lat.label(j) + "')");
      in.binary[d.name] = std::move(t);
      has_himp = has_himp || d.name == "himp";
      has_nimp = has_nimp || d.name == "nimp";
    } else {
      UnaryTable t(n, -1);
      for (const OpMapping& m : d.entries)
        t[idx(m.args[0], d.line, d.col)] = idx(m.value, d.line, d.col);
      for (int i = 0; i < n; ++i)
        if (t[i] < 0) throw missing("'" + lat.label(i) + "'");
      in.unary[d.name] = std::move(t);
    }
  }

  for (size_t i = 0; i < spec.constants.size(); ++i) {
    const auto& [name, value] = spec.constants[i];
    auto loc = i < spec.const_locs.size() ? spec.const_locs[i]
                                          : std::pair<int, int>{1, 1};
    int v = idx(value, loc.first, loc.second);
    if (name == "center") {
      in.consts["center"] = v;
    } else {
      // bot/top declarations are accepted but must agree with the order.
      int expected = name == "bot" ? lat.bot : lat.top;
      if (v != expected)
        throw ParseError("constant " + name + " is declared as '" + value +
                             "' but the order gives '" + lat.label(expected) +
                             "'",
                         loc.first, loc.second);
    }
  }

  bool heyting_family = spec.kind == "heyting" || spec.kind == "godel" ||
                        spec.kind == "monadic-godel";
  if (!has_himp && heyting_family) {
    try {
      in.binary["himp"] = derive_himp(lat);
    } catch (const Error& e) {
      throw ParseError(e.what(), spec.covers_line, spec.covers_col);
    }
  } else if (!has_himp && !has_nimp && spec.kind == "raw") {
    try {
      in.binary["himp"] = derive_himp(lat);
    } catch (const Error&) {
      // A raw spec need not be residuated; leave the implication out.
    }
  }

  Elaboration out;
  try {
    out.algebra = make_algebra(std::move(lat), in, spec.name);
  } catch (const Error& e) {
    throw ParseError(e.what(), spec.alg_line, spec.alg_col);
  }

  if (spec.kind == "raw") {
    out.report = CheckReport::ok();
    out.report.note = "kind 'raw': no suite checked";
    return out;
  }
  out.suite = spec.kind;
  try {
    out.report = check_suite(out.algebra, out.suite);
  } catch (const SuiteFailure&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), spec.alg_line, spec.alg_col);
  }
  if (!out.report.pass && !lenient)
    throw SuiteFailure(out.suite, out.report,
                       "algebra '" + spec.name +
                           "' does not satisfy its declared kind '" +
                           spec.kind + "'");
  return out;
}

Algebra load_algebra(const std::string& text, bool lenient) {
  return elaborate(parse_spec(text), lenient).algebra;
}

Formula parse_formula(const std::string& text) {
  return FormulaParser(text).parse();
}

std::string export_json(const Algebra& a) { return dump(algebra_json(a)); }

std::string export_json(const TwistAlgebra& t) {
  json j;
  j["base"] = algebra_json(t.base);
  json pairs = json::array();
  for (const auto& [a, b] : t.pairs)
    pairs.push_back(json::array({t.base.label(a), t.base.label(b)}));
  j["pairs"] = std::move(pairs);
  j["result"] = algebra_json(t.result);
  return dump(j);
}

std::string export_json(const ConLattice& c) {
  json j;
  json members = json::array();
  for (const Congruence& theta : c.congruences) members.push_back(theta.block);
  j["congruences"] = std::move(members);
  int n = static_cast<int>(c.congruences.size());
  json leq = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(c.lat.le(i, k));
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  return dump(j);
}

std::string export_json(const CheckReport& r, const Algebra* labels) {
  json j;
  j["verdict"] = r.pass ? "pass" : "fail";
  if (r.witness) j["witness"] = witness_json(*r.witness, labels);
  if (!r.all_witnesses.empty()) {
    json all = json::array();
    for (const Witness& w : r.all_witnesses)
      all.push_back(witness_json(w, labels));
    j["all_witnesses"] = std::move(all);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return dump(j);
}

Algebra import_algebra_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // Map nlohmann's byte offset back to a line/column pair.
    int line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  const json& j = root.contains("result") ? root["result"] : root;
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    throw Error("JSON algebra needs 'elements' and 'leq'");

  Poset p;
  for (const json& e : j["elements"]) {
    if (!e.is_string()) throw Error("element labels must be strings");
    p.names.push_back(e.get<std::string>());
  }
  int n = p.size();
  const json& leq = j["leq"];
  if (!leq.is_array() || leq.size() != static_cast<size_t>(n))
    throw Error("'leq' must be an n-by-n boolean matrix");
  for (const json& row : leq) {
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      throw Error("'leq' must be an n-by-n boolean matrix");
    std::vector<bool> r;
    for (const json& e : row) {
      if (!e.is_boolean()) throw Error("'leq' entries must be booleans");
      r.push_back(e.get<bool>());
    }
    p.leq.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i) {
    if (!p.leq[i][i]) throw Error("'leq' is not reflexive");
    for (int k = 0; k < n; ++k) {
      if (i != k && p.leq[i][k] && p.leq[k][i])
        throw Error("'leq' is not antisymmetric");
      for (int m = 0; m < n; ++m)
        if (p.leq[i][k] && p.leq[k][m] && !p.leq[i][m])
          throw Error("'leq' is not transitive");
    }
  }

  Lattice lat = derive_lattice(p);
  const json& ops = j.contains("ops") ? j["ops"] : json::object();
  if (ops.contains("join") &&
      binary_from_json(p, ops["join"], "join") != lat.join)
    throw Error("stored join table disagrees with the order");
  if (ops.contains("meet") &&
      binary_from_json(p, ops["meet"], "meet") != lat.meet)
    throw Error("stored meet table disagrees with the order");

  AlgebraInput in;
  for (const char* name : {"himp", "nimp"})
    if (ops.contains(name))
      in.binary[name] = binary_from_json(p, ops[name], name);
  for (const char* name : {"neg", "exists"})
    if (ops.contains(name))
      in.unary[name] = unary_from_json(p, ops[name], name);
  // forall is derived on the Nelson side; feed it through only when it is
  // genuinely user data, and in either case check it below.
  bool forall_derived = in.binary.count("nimp") && in.unary.count("neg") &&
                        in.unary.count("exists");
  if (ops.contains("forall") && !forall_derived)
    in.unary["forall"] = unary_from_json(p, ops["forall"], "forall");
  if (j.contains("center"))
    in.consts["center"] = label_index(p, j["center"], "center");

  std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
  Algebra a = make_algebra(std::move(lat), in, name);

  if (ops.contains("hneg") &&
      (!a.hneg || unary_from_json(p, ops["hneg"], "hneg") != *a.hneg))
    throw Error("stored hneg table disagrees with its derivation");
  if (forall_derived && ops.contains("forall") &&
      (!a.forall || unary_from_json(p, ops["forall"], "forall") != *a.forall))
    throw Error("stored forall table disagrees with its derivation");
  if (j.contains("bot") && label_index(p, j["bot"], "bot") != a.bot())
    throw Error("stored bot disagrees with the order");
  if (j.contains("top") && label_index(p, j["top"], "top") != a.top())
    throw Error("stored top disagrees with the order");
  return a;
}

}  // namespace twistbench
