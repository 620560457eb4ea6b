#include <cctype>
#include <sstream>

#include "ifol/syntax.hpp"

namespace ifol {

namespace {

enum class Tok {
  Ident, Number, Keyword,  // forall exists true false
  Not, And, Or, Arrow, Eq, LParen, RParen, Comma, Dot, Plus, Star, End
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;
  std::vector<Token> tokens;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  [[noreturn]] void fail(const std::string& msg, size_t at) {
    throw ParseError(msg, at);
  }

  void run() {
    while (i < src.size()) {
      char c = src[i];
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      size_t start = i;
      if (std::isalpha(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                src[j] == '\''))
          ++j;
        std::string word = src.substr(i, j - i);
        i = j;
        if (word == "forall" || word == "exists" || word == "true" || word == "false")
          tokens.push_back({Tok::Keyword, word, start});
        else
          tokens.push_back({Tok::Ident, word, start});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        tokens.push_back({Tok::Number, src.substr(i, j - i), start});
        i = j;
        continue;
      }
      switch (c) {
        case '~': tokens.push_back({Tok::Not, "~", start}); ++i; break;
        case '=': tokens.push_back({Tok::Eq, "=", start}); ++i; break;
        case '(': tokens.push_back({Tok::LParen, "(", start}); ++i; break;
        case ')': tokens.push_back({Tok::RParen, ")", start}); ++i; break;
        case ',': tokens.push_back({Tok::Comma, ",", start}); ++i; break;
        case '.': tokens.push_back({Tok::Dot, ".", start}); ++i; break;
        case '+': tokens.push_back({Tok::Plus, "+", start}); ++i; break;
        case '*': tokens.push_back({Tok::Star, "*", start}); ++i; break;
        case '/':
          if (i + 1 < src.size() && src[i + 1] == '\\') {
            tokens.push_back({Tok::And, "/\\", start});
            i += 2;
          } else {
            fail("expected /\\", start);
          }
          break;
        case '\\':
          if (i + 1 < src.size() && src[i + 1] == '/') {
            tokens.push_back({Tok::Or, "\\/", start});
            i += 2;
          } else {
            fail("expected \\/", start);
          }
          break;
        case '-':
          if (i + 1 < src.size() && src[i + 1] == '>') {
            tokens.push_back({Tok::Arrow, "->", start});
            i += 2;
          } else {
            fail("expected ->", start);
          }
          break;
        default:
          fail(std::string("unexpected character '") + c + "'", start);
      }
    }
    tokens.push_back({Tok::End, "", src.size()});
  }
};

struct Parser {
  const Signature& sig;
  const std::set<std::string>& consts;
  std::vector<Token> toks;
  size_t p = 0;

  Parser(const std::string& text, const Signature& s, const std::set<std::string>& cs)
      : sig(s), consts(cs) {
    Lexer lex(text);
    toks = std::move(lex.tokens);
  }

  const Token& peek() const { return toks[p]; }
  Token next() { return toks[p++]; }
  bool at(Tok k) const { return toks[p].kind == k; }
  bool at_keyword(const std::string& w) const {
    return toks[p].kind == Tok::Keyword && toks[p].text == w;
  }
  void expect(Tok k, const std::string& what) {
    if (!at(k)) throw ParseError("expected " + what, peek().pos);
    ++p;
  }

  // formula := or ('->' formula)?        right-associative
  FormulaPtr formula() {
    FormulaPtr lhs = disjunct();
    if (at(Tok::Arrow)) {
      next();
      return fb::implies(lhs, formula());
    }
    return lhs;
  }

  FormulaPtr disjunct() {
    FormulaPtr f = conjunct();
    while (at(Tok::Or)) {
      next();
      f = fb::disj(f, conjunct());
    }
    return f;
  }

  FormulaPtr conjunct() {
    FormulaPtr f = unary();
    while (at(Tok::And)) {
      next();
      f = fb::conj(f, unary());
    }
    return f;
  }

  FormulaPtr unary() {
    if (at(Tok::Not)) {
      next();
      return fb::neg(unary());
    }
    if (at_keyword("forall") || at_keyword("exists")) {
      bool isForall = peek().text == "forall";
      next();
      if (!at(Tok::Ident)) throw ParseError("expected variable after quantifier", peek().pos);
      Token v = next();
      if (sig.knows(v.text) || consts.count(v.text))
        throw ParseError("quantified variable '" + v.text + "' shadows a declared symbol",
                         v.pos);
      expect(Tok::Dot, "'.'");
      FormulaPtr body = formula();  // quantifier binds the longest formula
      return isForall ? fb::forall(v.text, body) : fb::exists(v.text, body);
    }
    return atom();
  }

  FormulaPtr atom() {
    if (at_keyword("true")) { next(); return fb::top(); }
    if (at_keyword("false")) { next(); return fb::bottom(); }
    if (at(Tok::LParen)) {
      // Could be a parenthesized formula or a parenthesized term starting an
      // equation; try the term reading first and backtrack.
      size_t save = p;
      try {
        TermPtr lhs = term();
        if (at(Tok::Eq)) {
          next();
          return fb::eq(lhs, term());
        }
      } catch (const ParseError&) {
      }
      p = save;
      next();  // '('
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at(Tok::Ident)) {
      const Token& id = peek();
      auto parity = sig.predicate_arity(id.text);
      if (parity) {
        next();
        std::vector<TermPtr> args;
        if (at(Tok::LParen)) {
          next();
          if (!at(Tok::RParen)) {
            args.push_back(term());
            while (at(Tok::Comma)) {
              next();
              args.push_back(term());
            }
          }
          expect(Tok::RParen, "')'");
        }
        if (static_cast<int>(args.size()) != *parity)
          throw ParseError("predicate " + id.text + " expects " +
                               std::to_string(*parity) + " arguments",
                           id.pos);
        return fb::pred(id.text, std::move(args));
      }
    }
    // Otherwise an equation between terms.
    TermPtr lhs = term();
    expect(Tok::Eq, "'='");
    return fb::eq(lhs, term());
  }

  // term := factor ('+' factor)*      factor := primary ('*' primary)*
  TermPtr term() {
    TermPtr t = factor();
    while (at(Tok::Plus)) {
      next();
      t = apply("+", {t, factor()});
    }
    return t;
  }

  TermPtr factor() {
    TermPtr t = primary();
    while (at(Tok::Star)) {
      next();
      t = apply("*", {t, primary()});
    }
    return t;
  }

  TermPtr primary() {
    if (at(Tok::Number)) {
      Token n = next();
      return numeral(Nat(n.text));
    }
    if (at(Tok::LParen)) {
      next();
      TermPtr t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (!at(Tok::Ident)) throw ParseError("expected a term", peek().pos);
    Token id = next();
    if (at(Tok::LParen)) {
      auto farity = sig.function_arity(id.text);
      if (!farity) throw ParseError("unknown symbol " + id.text, id.pos);
      next();
      std::vector<TermPtr> args;
      if (!at(Tok::RParen)) {
        args.push_back(term());
        while (at(Tok::Comma)) {
          next();
          args.push_back(term());
        }
      }
      expect(Tok::RParen, "')'");
      if (static_cast<int>(args.size()) != *farity)
        throw ParseError("function " + id.text + " expects " + std::to_string(*farity) +
                             " arguments",
                         id.pos);
      return apply(id.text, std::move(args));
    }
    auto farity = sig.function_arity(id.text);
    if (farity) {
      if (*farity != 0)
        throw ParseError("function " + id.text + " expects arguments", id.pos);
      return apply(id.text);
    }
    if (consts.count(id.text)) return apply(id.text);
    return var(id.text);
  }
};

// --- Printing ---------------------------------------------------------------

// Formula precedence levels: -> 1, \/ 2, /\ 3, unary 4, atom 5.
int prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 4;
    default: return 5;
  }
}

void print_term_prec(const TermPtr& t, int level, std::ostream& os);

// Term precedence: + 1, * 2, primary 3.
void print_term_prec(const TermPtr& t, int level, std::ostream& os) {
  if (t->kind == Term::Kind::Variable) {
    os << t->name;
    return;
  }
  if (auto v = numeral_value(t)) {
    os << v->str();
    return;
  }
  if (t->name == "+" || t->name == "*") {
    int myLevel = t->name == "+" ? 1 : 2;
    bool parens = myLevel < level;
    if (parens) os << "(";
    print_term_prec(t->args[0], myLevel, os);
    os << " " << t->name << " ";
    print_term_prec(t->args[1], myLevel + 1, os);  // left-associative
    if (parens) os << ")";
    return;
  }
  os << t->name;
  if (!t->args.empty()) {
    os << "(";
    for (size_t i = 0; i < t->args.size(); ++i) {
      if (i) os << ", ";
      print_term_prec(t->args[i], 1, os);
    }
    os << ")";
  }
}

void print_formula_prec(const FormulaPtr& f, int level, std::ostream& os) {
  int myPrec = prec(f->kind);
  bool parens = myPrec < level;
  switch (f->kind) {
    case Formula::Kind::Top: os << "true"; return;
    case Formula::Kind::Bottom: os << "false"; return;
    case Formula::Kind::AtomEq:
      if (parens) os << "(";
      print_term_prec(f->terms[0], 1, os);
      os << " = ";
      print_term_prec(f->terms[1], 1, os);
      if (parens) os << ")";
      return;
    case Formula::Kind::AtomPred:
      os << f->name;
      if (!f->terms.empty()) {
        os << "(";
        for (size_t i = 0; i < f->terms.size(); ++i) {
          if (i) os << ", ";
          print_term_prec(f->terms[i], 1, os);
        }
        os << ")";
      }
      return;
    case Formula::Kind::And:
      if (parens) os << "(";
      print_formula_prec(f->left, 3, os);
      os << " /\\ ";
      print_formula_prec(f->right, 4, os);
      if (parens) os << ")";
      return;
    case Formula::Kind::Or:
      if (parens) os << "(";
      print_formula_prec(f->left, 2, os);
      os << " \\/ ";
      print_formula_prec(f->right, 3, os);
      if (parens) os << ")";
      return;
    case Formula::Kind::Implies:
      if (parens) os << "(";
      print_formula_prec(f->left, 2, os);
      os << " -> ";
      print_formula_prec(f->right, 1, os);
      if (parens) os << ")";
      return;
    case Formula::Kind::Not:
      if (parens) os << "(";
      os << "~";
      print_formula_prec(f->left, 4, os);
      if (parens) os << ")";
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      // A quantifier body extends maximally right, so the quantifier needs
      // parens whenever it is not in tail position of its group (level 1).
      parens = level > 1;
      if (parens) os << "(";
      os << (f->kind == Formula::Kind::Forall ? "forall " : "exists ") << f->name << ". ";
      print_formula_prec(f->left, 1, os);
      if (parens) os << ")";
      return;
  }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Signature& sig,
                         const std::set<std::string>& extraConstants) {
  Parser parser(text, sig, extraConstants);
  FormulaPtr f = parser.formula();
  if (!parser.at(Tok::End))
    throw ParseError("trailing input", parser.peek().pos);
  return f;
}

TermPtr parse_term(const std::string& text, const Signature& sig,
                   const std::set<std::string>& extraConstants) {
  Parser parser(text, sig, extraConstants);
  TermPtr t = parser.term();
  if (!parser.at(Tok::End))
    throw ParseError("trailing input", parser.peek().pos);
  return t;
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula_prec(f, 1, os);
  return os.str();
}

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  print_term_prec(t, 1, os);
  return os.str();
}

}  // namespace ifol
