#include "bimod/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "bimod/errors.hpp"

namespace bimod {

namespace {

struct Token {
  enum Type { Name, Punct, End } type;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance();
    } else if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance();
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      Token t{Token::Name, "", line, col};
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
      out.push_back(t);
    } else if (std::string(";*(),^").find(ch) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, ch), line, col});
      advance();
    } else {
      throw SyntaxError(std::string("unexpected character '") + ch + "'", line, col);
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

const std::set<std::string>& primitives() {
  static const std::set<std::string> p{"id", "c", "cinv", "b", "d", "bt", "dt"};
  return p;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().type != Token::End) fail("expected end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at(const char* p) const { return peek().type == Token::Punct && peek().text == p; }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string got = t.type == Token::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(what + ", got " + got, t.line, t.col);
  }
  void expect(const char* p) {
    if (!at(p)) fail(std::string("expected '") + p + "'");
    ++pos_;
  }

  static ExprPtr binary(DiagramExpr::Kind k, ExprPtr a, ExprPtr b, const Token& op) {
    auto e = std::make_shared<DiagramExpr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    e->line = op.line;
    e->col = op.col;
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = tensor();
    while (at(";")) {
      Token op = next();
      e = binary(DiagramExpr::Kind::Compose, e, tensor(), op);
    }
    return e;
  }

  ExprPtr tensor() {
    ExprPtr e = atom();
    while (at("*")) {
      Token op = next();
      e = binary(DiagramExpr::Kind::Tensor, e, atom(), op);
    }
    return e;
  }

  WordRef words() {
    WordRef w;
    while (peek().type == Token::Name) {
      ObjectRef r{next().text, 0};
      while (at("^")) {
        ++pos_;
        ++r.duals;
      }
      w.push_back(r);
    }
    return w;
  }

  ExprPtr atom() {
    if (at("(")) {
      ++pos_;
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (peek().type != Token::Name) fail("expected a diagram");
    Token t = next();
    auto e = std::make_shared<DiagramExpr>();
    e->line = t.line;
    e->col = t.col;
    if (!primitives().count(t.text) || !at("(")) {
      e->kind = DiagramExpr::Kind::Named;
      e->name = t.text;
      return e;
    }
    ++pos_;
    e->w1 = words();
    const bool two = t.text == "c" || t.text == "cinv";
    if (two) {
      expect(",");
      e->w2 = words();
    }
    expect(")");
    using K = DiagramExpr::Kind;
    if (t.text == "id") e->kind = K::Id;
    else if (t.text == "c") e->kind = K::Braid;
    else if (t.text == "cinv") e->kind = K::BraidInv;
    else if (t.text == "b") e->kind = K::Cup;
    else if (t.text == "d") e->kind = K::Cap;
    else if (t.text == "bt") e->kind = K::CupTilde;
    else e->kind = K::CapTilde;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string where(const DiagramExpr& e) {
  return " at " + std::to_string(e.line) + ":" + std::to_string(e.col);
}

}  // namespace

ExprPtr parse_diagram(const std::string& src) { return Parser(tokenize(src)).parse(); }

Word resolve(const MtcData& C, const DiagramEnv& env, const WordRef& w) {
  Word out;
  for (const auto& r : w) {
    Word part;
    auto it = env.objects.find(r.name);
    if (it != env.objects.end()) {
      part = it->second;
    } else {
      auto lt = std::find(C.labels.begin(), C.labels.end(), r.name);
      if (lt == C.labels.end()) throw UnboundSymbol("unbound object '" + r.name + "'");
      part = {Object::simple(static_cast<int>(lt - C.labels.begin()))};
    }
    for (int k = 0; k < r.duals; ++k) part = dual_word(C, part);
    out = concat(out, part);
  }
  return out;
}

std::pair<Word, Word> typecheck(const MtcData& C, const DiagramEnv& env, const DiagramExpr& e) {
  using K = DiagramExpr::Kind;
  switch (e.kind) {
    case K::Id: {
      Word w = resolve(C, env, e.w1);
      return {w, w};
    }
    case K::Compose: {
      auto f = typecheck(C, env, *e.lhs);
      auto g = typecheck(C, env, *e.rhs);
      if (f.second != g.first) {
        throw TypeMismatch("';'" + where(e) + ": left side ends in " + to_string(C, f.second) +
                           ", right side starts from " + to_string(C, g.first));
      }
      return {f.first, g.second};
    }
    case K::Tensor: {
      auto f = typecheck(C, env, *e.lhs);
      auto g = typecheck(C, env, *e.rhs);
      return {concat(f.first, g.first), concat(f.second, g.second)};
    }
    case K::Braid:
    case K::BraidInv: {
      Word u = resolve(C, env, e.w1), v = resolve(C, env, e.w2);
      if (e.kind == K::Braid) return {concat(u, v), concat(v, u)};
      return {concat(v, u), concat(u, v)};
    }
    case K::Cup:
    case K::CapTilde: {
      Word w = resolve(C, env, e.w1);
      Word ww = concat(w, dual_word(C, w));
      if (e.kind == K::Cup) return {Word{}, ww};
      return {ww, Word{}};
    }
    case K::Cap:
    case K::CupTilde: {
      Word w = resolve(C, env, e.w1);
      Word ww = concat(dual_word(C, w), w);
      if (e.kind == K::CupTilde) return {Word{}, ww};
      return {ww, Word{}};
    }
    case K::Named: {
      auto it = env.morphisms.find(e.name);
      if (it == env.morphisms.end()) throw UnboundSymbol("unbound morphism '" + e.name + "'" + where(e));
      return {it->second.source, it->second.target};
    }
  }
  throw TypeMismatch("unknown node");
}

Morphism evaluate(const Engine& E, const DiagramEnv& env, const DiagramExpr& e) {
  using K = DiagramExpr::Kind;
  const MtcData& C = E.category();
  switch (e.kind) {
    case K::Id:
      return E.identity(resolve(C, env, e.w1));
    case K::Compose: {
      Morphism f = evaluate(E, env, *e.lhs);
      Morphism g = evaluate(E, env, *e.rhs);
      if (f.target != g.source) typecheck(C, env, e);
      return E.compose(g, f);
    }
    case K::Tensor:
      return E.tensor(evaluate(E, env, *e.lhs), evaluate(E, env, *e.rhs));
    case K::Braid:
      return E.braid(resolve(C, env, e.w1), resolve(C, env, e.w2), false);
    case K::BraidInv:
      return E.braid(resolve(C, env, e.w1), resolve(C, env, e.w2), true);
    case K::Cup:
      return E.coev(resolve(C, env, e.w1));
    case K::Cap:
      return E.ev(resolve(C, env, e.w1));
    case K::CupTilde:
      return E.coev_tilde(resolve(C, env, e.w1));
    case K::CapTilde:
      return E.ev_tilde(resolve(C, env, e.w1));
    case K::Named: {
      auto it = env.morphisms.find(e.name);
      if (it == env.morphisms.end()) throw UnboundSymbol("unbound morphism '" + e.name + "'" + where(e));
      return it->second;
    }
  }
  throw TypeMismatch("unknown node");
}

Morphism evaluate(const Engine& E, const DiagramEnv& env, const std::string& src) {
  ExprPtr e = parse_diagram(src);
  typecheck(E.category(), env, *e);
  return evaluate(E, env, *e);
}

static std::string words_text(const WordRef& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i].name + std::string(w[i].duals, '^');
  }
  return s;
}

std::string to_string(const DiagramExpr& e) {
  using K = DiagramExpr::Kind;
  switch (e.kind) {
    case K::Id: return "id(" + words_text(e.w1) + ")";
    case K::Compose: return "(" + to_string(*e.lhs) + " ; " + to_string(*e.rhs) + ")";
    case K::Tensor: return "(" + to_string(*e.lhs) + " * " + to_string(*e.rhs) + ")";
    case K::Braid: return "c(" + words_text(e.w1) + ", " + words_text(e.w2) + ")";
    case K::BraidInv: return "cinv(" + words_text(e.w1) + ", " + words_text(e.w2) + ")";
    case K::Cup: return "b(" + words_text(e.w1) + ")";
    case K::Cap: return "d(" + words_text(e.w1) + ")";
    case K::CupTilde: return "bt(" + words_text(e.w1) + ")";
    case K::CapTilde: return "dt(" + words_text(e.w1) + ")";
    case K::Named: return e.name;
  }
  return "";
}

}  // namespace bimod
