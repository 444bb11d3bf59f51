#include "strictpat/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace strictpat {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  Ident,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Colon,
  Dot,
  Backslash,
  Caret,  // ^k
  At,     // @k
  Arrow,  // ->k, or bare -> in the plain dialect
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::optional<Label> label;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src, Dialect dialect) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto label_after = [&](std::size_t pos, const char* what) -> Label {
    if (pos < src.size()) {
      if (auto k = label_from_char(src[pos])) return *k;
    }
    throw ParseError(std::string("expected label 1, 0 or u after ") + what, line, col);
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::End, {}, std::nullopt, line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '[': t.kind = Tok::LBracket; advance(1); break;
      case ']': t.kind = Tok::RBracket; advance(1); break;
      case '(': t.kind = Tok::LParen; advance(1); break;
      case ')': t.kind = Tok::RParen; advance(1); break;
      case ',': t.kind = Tok::Comma; advance(1); break;
      case ':': t.kind = Tok::Colon; advance(1); break;
      case '.': t.kind = Tok::Dot; advance(1); break;
      case '\\': t.kind = Tok::Backslash; advance(1); break;
      case '^':
        t.kind = Tok::Caret;
        t.label = label_after(i + 1, "'^'");
        advance(2);
        break;
      case '@':
        t.kind = Tok::At;
        t.label = label_after(i + 1, "'@'");
        advance(2);
        break;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          t.kind = Tok::Arrow;
          if (dialect == Dialect::Strict) {
            t.label = label_after(i + 2, "'->'");
            advance(3);
          } else {
            advance(2);
          }
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, {}, std::nullopt, line, col});
  return out;
}

const char* tok_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Backslash: return "'\\'";
    case Tok::Caret: return "'^'";
    case Tok::At: return "'@'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view src, Dialect dialect, const Signature* sig)
      : toks_(lex(src, dialect)), dialect_(dialect), sig_(sig) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok k) {
    if (!at(k))
      fail(std::string("expected ") + tok_name(k) + ", found " + tok_name(peek().kind));
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  void expect_end() {
    if (!at(Tok::End)) fail(std::string("unexpected ") + tok_name(peek().kind));
  }

  // type := tatom (-> type)?
  Type type(bool check_atoms = true) {
    Type dom = type_atom(check_atoms);
    if (at(Tok::Arrow)) {
      Label k = next().label.value_or(Label::U);
      Type cod = type(check_atoms);
      return Type::arrow(std::move(dom), k, std::move(cod));
    }
    return dom;
  }

  Type type_atom(bool check_atoms) {
    if (at(Tok::LParen)) {
      next();
      Type t = type(check_atoms);
      expect(Tok::RParen);
      return t;
    }
    const Token& id = expect(Tok::Ident);
    if (check_atoms && sig_ && !sig_->has_type(id.text))
      throw ParseError("unknown type '" + id.text + "'", id.line, id.column);
    return Type::atom(id.text);
  }

  Term term(const ParseOptions& opts) {
    if (at(Tok::Backslash)) return lambda(opts);
    return dialect_ == Dialect::Strict ? strict_app(opts) : plain_app(opts);
  }

  Term lambda(const ParseOptions& opts) {
    expect(Tok::Backslash);
    std::string x = expect(Tok::Ident).text;
    Label k = Label::U;
    if (dialect_ == Dialect::Strict) k = *expect(Tok::Caret).label;
    expect(Tok::Colon);
    Type a = type();
    expect(Tok::Dot);
    bound_.push_back(x);
    Term body = term(opts);
    bound_.pop_back();
    return Term::lam(x, k, a, body);
  }

  Term strict_app(const ParseOptions& opts) {
    Term t = atom(opts);
    while (at(Tok::At)) {
      Label k = *next().label;
      if (at(Tok::Backslash)) return Term::app(t, lambda(opts), k);
      t = Term::app(t, atom(opts), k);
    }
    return t;
  }

  Term plain_app(const ParseOptions& opts) {
    Term t = atom(opts);
    while (at(Tok::Ident) || at(Tok::LParen) || at(Tok::Backslash)) {
      if (at(Tok::Backslash)) return Term::app(t, lambda(opts), Label::U);
      t = Term::app(t, atom(opts), Label::U);
    }
    return t;
  }

  bool is_bound(const std::string& x) const {
    for (const auto& b : bound_)
      if (b == x) return true;
    return false;
  }

  Term atom(const ParseOptions& opts) {
    if (at(Tok::LParen)) {
      next();
      Term t = term(opts);
      expect(Tok::RParen);
      return t;
    }
    const Token& id = expect(Tok::Ident);
    if (at(Tok::LBracket)) return evar(id, opts);
    if (is_bound(id.text)) return Term::var(id.text);
    if (sig_ && sig_->has_const(id.text)) return Term::constant(id.text);
    if (sig_ && sig_->has_type(id.text))
      throw ParseError("type '" + id.text + "' used as a term", id.line, id.column);
    if (opts.known_free && !opts.known_free->count(id.text))
      throw ParseError("unknown identifier '" + id.text + "'", id.line, id.column);
    return Term::var(id.text);
  }

  Term evar(const Token& id, const ParseOptions& opts) {
    expect(Tok::LBracket);
    LabeledVarList phi;
    std::set<std::string> seen;
    if (!at(Tok::RBracket)) {
      for (;;) {
        const Token& x = expect(Tok::Ident);
        if (!is_bound(x.text)) {
          if (sig_ && (sig_->has_const(x.text) || sig_->has_type(x.text)))
            throw ParseError("argument '" + x.text + "' of '" + id.text +
                                 "' is not a variable",
                             x.line, x.column);
          if (opts.known_free && !opts.known_free->count(x.text))
            throw ParseError("unknown identifier '" + x.text + "'", x.line, x.column);
        }
        if (!seen.insert(x.text).second)
          throw ParseError("repeated argument '" + x.text + "' of '" + id.text + "'",
                           x.line, x.column);
        Label k = Label::U;
        if (dialect_ == Dialect::Strict) k = *expect(Tok::Caret).label;
        phi.push_back({x.text, k});
        if (!at(Tok::Comma)) break;
        next();
      }
    }
    expect(Tok::RBracket);
    return Term::evar(id.text, std::move(phi));
  }

  // Signature: sequence of `name : type.` or `name : A.`
  Signature signature() {
    Signature sig;
    sig_ = &sig;
    while (!at(Tok::End)) {
      const Token& id = expect(Tok::Ident);
      expect(Tok::Colon);
      if (at(Tok::Ident) && peek().text == "type" && toks_[pos_ + 1].kind == Tok::Dot) {
        next();
        try {
          sig.declare_type(id.text);
        } catch (const Error& e) {
          throw ParseError(e.what(), id.line, id.column);
        }
      } else {
        Type a = type();
        try {
          sig.declare_const(id.text, a);
        } catch (const Error& e) {
          throw ParseError(e.what(), id.line, id.column);
        }
      }
      expect(Tok::Dot);
    }
    sig_ = nullptr;
    return sig;
  }

  FlatContext context() {
    FlatContext psi;
    if (at(Tok::End)) return psi;
    for (;;) {
      const Token& id = expect(Tok::Ident);
      expect(Tok::Colon);
      Type a = type();
      if (lookup(psi, id.text))
        throw ParseError("duplicate declaration of '" + id.text + "'", id.line, id.column);
      if (sig_ && (sig_->has_const(id.text) || sig_->has_type(id.text)))
        throw ParseError("'" + id.text + "' is already declared in the signature", id.line,
                         id.column);
      psi.push_back({id.text, a});
      if (!at(Tok::Comma)) break;
      next();
    }
    return psi;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Dialect dialect_;
  const Signature* sig_;
  std::vector<std::string> bound_;
};

// ---------------------------------------------------------------------------
// Printing

void print_type_to(const Type& t, Dialect d, std::string& out) {
  if (t.is_atom()) {
    out += t.name();
    return;
  }
  if (t.domain().is_arrow()) {
    out += '(';
    print_type_to(t.domain(), d, out);
    out += ')';
  } else {
    out += t.domain().name();
  }
  out += " ->";
  if (d == Dialect::Strict) out += label_char(t.label());
  out += ' ';
  print_type_to(t.codomain(), d, out);
}

enum class Pos { Top, Fun, Arg };

class Printer {
 public:
  Printer(Dialect d, std::set<std::string> taken) : d_(d), taken_(std::move(taken)) {}

  std::string name_of(const std::string& x) const {
    for (auto it = names_.rbegin(); it != names_.rend(); ++it)
      if (it->first == x) return it->second;
    return x;
  }

  void print(const Term& t, Pos pos, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::Const:
        out += t.name();
        return;
      case Term::Kind::Var:
        out += name_of(t.name());
        return;
      case Term::Kind::EVar: {
        out += t.name();
        out += '[';
        bool first = true;
        for (const auto& a : t.args()) {
          if (!first) out += ", ";
          first = false;
          out += name_of(a.name);
          if (d_ == Dialect::Strict) {
            out += '^';
            out += label_char(a.label);
          }
        }
        out += ']';
        return;
      }
      case Term::Kind::App: {
        if (pos == Pos::Arg) out += '(';
        print(t.fun(), Pos::Fun, out);
        if (d_ == Dialect::Strict) {
          out += " @";
          out += label_char(t.label());
          out += ' ';
        } else {
          out += ' ';
        }
        print(t.arg(), Pos::Arg, out);
        if (pos == Pos::Arg) out += ')';
        return;
      }
      case Term::Kind::Lam: {
        if (pos != Pos::Top) out += '(';
        std::string y = t.name();
        if (taken_.count(y)) y = fresh_numbered(y, taken_);
        out += '\\';
        out += y;
        if (d_ == Dialect::Strict) {
          out += '^';
          out += label_char(t.label());
        }
        out += ':';
        print_type_to(t.domain(), d_, out);
        out += ". ";
        names_.emplace_back(t.name(), y);
        bool added = taken_.insert(y).second;
        print(t.body(), Pos::Top, out);
        if (added) taken_.erase(y);
        names_.pop_back();
        if (pos != Pos::Top) out += ')';
        return;
      }
    }
  }

 private:
  Dialect d_;
  std::set<std::string> taken_;
  std::vector<std::pair<std::string, std::string>> names_;
};

}  // namespace

Signature parse_signature(std::string_view text, Dialect dialect) {
  Parser p(text, dialect, nullptr);
  return p.signature();
}

Type parse_type(std::string_view text, const Signature& sig, Dialect dialect) {
  Parser p(text, dialect, &sig);
  Type t = p.type();
  p.expect_end();
  return t;
}

Term parse_term(std::string_view text, const Signature& sig, const ParseOptions& opts) {
  Parser p(text, opts.dialect, &sig);
  Term t = p.term(opts);
  p.expect_end();
  return t;
}

FlatContext parse_context(std::string_view text, const Signature& sig, Dialect dialect) {
  Parser p(text, dialect, &sig);
  FlatContext psi = p.context();
  p.expect_end();
  return psi;
}

std::string print_type(const Type& t, Dialect dialect) {
  std::string out;
  print_type_to(t, dialect, out);
  return out;
}

std::string print_term(const Term& t, Dialect dialect) {
  Printer p(dialect, free_vars(t));
  std::string out;
  p.print(t, Pos::Top, out);
  return out;
}

std::string print_context(const FlatContext& psi, Dialect dialect) {
  std::string out;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i) out += ", ";
    out += psi[i].name;
    out += ':';
    out += print_type(psi[i].type, dialect);
  }
  return out;
}

std::string print_signature(const Signature& sig, Dialect dialect) {
  std::string out;
  for (const auto& d : sig.decls()) {
    out += d.name;
    out += " : ";
    out += d.is_type ? std::string("type") : print_type(*d.type, dialect);
    out += ".\n";
  }
  return out;
}

std::string print_phi(const LabeledVarList& phi) {
  std::string out = "(";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) out += ", ";
    out += phi[i].name;
    out += '^';
    out += label_char(phi[i].label);
  }
  return out + ")";
}

}  // namespace strictpat
