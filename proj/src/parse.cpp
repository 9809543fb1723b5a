#include "regmap/parse.hpp"

#include <cctype>
#include <cstdint>

#include "regmap/errors.hpp"

namespace regmap {

namespace {

// Guards against pathological exponents blowing up word storage.
constexpr std::int64_t kMaxExponent = 1'000'000;
constexpr std::size_t kMaxWordLength = 10'000'000;

struct Token {
  enum Kind { Ident, Integer, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, Semi, End };
  Kind kind = End;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      bump();
    }
    tok_.line = line_;
    tok_.column = column_;
    tok_.value = 0;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::End;
      tok_.text.clear();
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '*': single(Token::Star); return;
      case '^': single(Token::Caret); return;
      case '(': single(Token::LParen); return;
      case ')': single(Token::RParen); return;
      case '[': single(Token::LBracket); return;
      case ']': single(Token::RBracket); return;
      case ',': single(Token::Comma); return;
      case ';': single(Token::Semi); return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        bump();
      }
      tok_.kind = Token::Ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      if (c == '-') bump();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw SyntaxError("expected digits after '-'", tok_.line, tok_.column);
      }
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > kMaxExponent) {
          throw SyntaxError("integer literal too large", tok_.line, tok_.column);
        }
        bump();
      }
      tok_.kind = Token::Integer;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      tok_.value = (c == '-') ? -v : v;
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
  }

  void single(Token::Kind k) {
    tok_.kind = k;
    tok_.text = text_[pos_];
    bump();
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token tok_;
};

// Word-level recursive descent over a shared lexer, so the presentation
// parser can continue where the header left off.
class WordParser {
 public:
  WordParser(Lexer& lex, const std::vector<std::string>& generators)
      : lex_(lex), generators_(generators) {}

  Word word() {
    Word w = factor();
    while (lex_.peek().kind == Token::Star) {
      lex_.take();
      w = w * factor();
    }
    return w;
  }

 private:
  Word factor() {
    Word base = atom();
    if (lex_.peek().kind == Token::Caret) {
      lex_.take();
      const Token e = lex_.take();
      if (e.kind != Token::Integer) {
        throw SyntaxError("expected integer exponent", e.line, e.column);
      }
      const std::int64_t mag = e.value < 0 ? -e.value : e.value;
      if (base.size() * static_cast<std::size_t>(mag > 0 ? mag : 1) > kMaxWordLength) {
        throw SyntaxError("word too long", e.line, e.column);
      }
      return base.pow(static_cast<int>(e.value));
    }
    return base;
  }

  Word atom() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Token::Ident: {
        for (std::size_t i = 0; i < generators_.size(); ++i) {
          if (generators_[i] == t.text) return Word::generator(static_cast<int>(i));
        }
        throw UnknownGeneratorError(t.text, t.line, t.column);
      }
      case Token::LParen: {
        Word w = word();
        const Token r = lex_.take();
        if (r.kind != Token::RParen) throw SyntaxError("expected ')'", r.line, r.column);
        return w;
      }
      case Token::LBracket: {
        Word a = word();
        const Token c = lex_.take();
        if (c.kind != Token::Comma) throw SyntaxError("expected ','", c.line, c.column);
        Word b = word();
        const Token r = lex_.take();
        if (r.kind != Token::RBracket) throw SyntaxError("expected ']'", r.line, r.column);
        return commutator(a, b);
      }
      default:
        throw SyntaxError("expected a generator, '(' or '['", t.line, t.column);
    }
  }

  Lexer& lex_;
  const std::vector<std::string>& generators_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Lexer lex(text);
  Token t = lex.take();
  if (t.kind != Token::Ident || t.text != "gens") {
    throw SyntaxError("expected 'gens'", t.line, t.column);
  }
  Presentation p;
  while (lex.peek().kind == Token::Ident && lex.peek().text != "rels") {
    const Token g = lex.take();
    for (const auto& existing : p.generators) {
      if (existing == g.text) {
        throw SyntaxError("duplicate generator '" + g.text + "'", g.line, g.column);
      }
    }
    p.generators.push_back(g.text);
  }
  if (p.generators.empty()) {
    throw SyntaxError("expected at least one generator", lex.peek().line, lex.peek().column);
  }
  t = lex.take();
  if (t.kind != Token::Semi) {
    throw SyntaxError("expected ';' after generator list", t.line, t.column);
  }
  t = lex.take();
  if (t.kind != Token::Ident || t.text != "rels") {
    throw SyntaxError("expected 'rels'", t.line, t.column);
  }

  WordParser words(lex, p.generators);
  while (true) {
    const Token first = lex.peek();
    Word w = words.word();
    if (w.empty()) throw EmptyRelatorError(first.line, first.column);
    p.relators.push_back(std::move(w));
    if (lex.peek().kind == Token::Comma) {
      lex.take();
      continue;
    }
    break;
  }
  t = lex.take();
  if (t.kind != Token::End) {
    throw SyntaxError("unexpected trailing input", t.line, t.column);
  }
  return p;
}

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  Lexer lex(text);
  WordParser words(lex, generators);
  Word w = words.word();
  const Token& t = lex.peek();
  if (t.kind != Token::End) {
    throw SyntaxError("unexpected trailing input", t.line, t.column);
  }
  return w;
}

}  // namespace regmap
