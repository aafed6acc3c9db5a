#include "csm/parser.hpp"

#include <cctype>
#include <limits>
#include <regex>

namespace csm {

ParseError::ParseError(SourceSpan span, std::string expected, std::string found)
    : std::runtime_error(to_string(span) + ": expected " + expected + ", found " + found),
      span_(std::move(span)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Ident, Nat, LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, Colon, Define, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::uint64_t nat = 0;
  SourceSpan span;
  // REQ_* tags found in the comments between the previous token and this one.
  std::vector<std::string> tags;
};

constexpr std::uint64_t kMaxNat = std::numeric_limits<std::uint32_t>::max();

bool is_keyword(const std::string& s) {
  return s == "const" || s == "block" || s == "init" || s == "tc" || s == "tcd" || s == "guard" || s == "inv";
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident:
      return is_keyword(t.text) ? "keyword '" + t.text + "'" : "identifier '" + t.text + "'";
    case Tok::Nat:
      return "number " + t.text;
    case Tok::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<std::string> requirement_tags(const std::string& comment) {
  static const std::regex kTag("REQ_[A-Z0-9_]+");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(comment.begin(), comment.end(), kTag); it != std::sregex_iterator(); ++it) {
    out.push_back(it->str());
  }
  return out;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::vector<std::string> pending_tags;
    while (true) {
      skip_space();
      if (peek() == '#') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        auto tags = requirement_tags(std::string(text_.substr(start, pos_ - start)));
        pending_tags.insert(pending_tags.end(), tags.begin(), tags.end());
        continue;
      }
      Token t = next();
      t.tags = std::move(pending_tags);
      pending_tags.clear();
      out.push_back(std::move(t));
      if (out.back().kind == Tok::End) return out;
    }
  }

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  SourceSpan here() const { return SourceSpan{file_, line_, column_}; }

  Token next() {
    Token t;
    t.span = here();
    if (pos_ >= text_.size()) {
      t.kind = Tok::End;
      return t;
    }
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      t.kind = Tok::Ident;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::uint64_t value = 0;
      bool overflow = false;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (value > kMaxNat) overflow = true;
        advance();
      }
      t.kind = Tok::Nat;
      t.text = std::string(text_.substr(start, pos_ - start));
      if (overflow) throw ParseError(t.span, "number at most " + std::to_string(kMaxNat), "number " + t.text);
      t.nat = value;
      return t;
    }
    if (c == ':' && peek(1) == '=') {
      advance();
      advance();
      t.kind = Tok::Define;
      t.text = ":=";
      return t;
    }
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case ',': t.kind = Tok::Comma; break;
      case ':': t.kind = Tok::Colon; break;
      default:
        throw ParseError(t.span, "a token", "character '" + std::string(1, c) + "'");
    }
    t.text = std::string(1, c);
    advance();
    return t;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Model parse_model() {
    Model m;
    while (peek().kind != Tok::End) {
      if (at_keyword("const")) {
        m.consts.push_back(parse_const());
      } else if (at_keyword("block")) {
        m.blocks.push_back(parse_block());
      } else {
        fail("'const' or 'block'");
      }
    }
    return m;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& take() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(peek().span, expected, describe(peek())); }

  const Token& expect(Tok kind, const char* expected) {
    if (peek().kind != kind) fail(expected);
    return take();
  }

  const Token& expect_keyword(const char* kw) {
    if (!at_keyword(kw)) fail(std::string("'") + kw + "'");
    return take();
  }

  const Token& expect_ident() {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail("identifier");
    return take();
  }

  ConstDecl parse_const() {
    ConstDecl c;
    c.span = expect_keyword("const").span;
    c.name = expect_ident().text;
    c.value = expect(Tok::Nat, "number").nat;
    return c;
  }

  Block parse_block() {
    Block b;
    const Token& kw = expect_keyword("block");
    b.span = kw.span;
    b.requirement_tags = kw.tags;
    b.name = expect_ident().text;
    expect(Tok::Define, "':='");
    b.initial_span = expect_keyword("init").span;
    expect(Tok::LParen, "'('");
    b.initial = expect_ident().text;
    expect(Tok::RParen, "')'");

    while (true) {
      if (at_keyword("tc") || at_keyword("tcd")) {
        b.transitions.push_back(parse_transition());
      } else if (at_keyword("guard")) {
        Guard g;
        g.span = take().span;
        g.tc = parse_target();
        g.condition = parse_condition();
        b.guards.push_back(std::move(g));
      } else if (at_keyword("inv")) {
        StateInvariant inv;
        inv.span = take().span;
        inv.block = b.name;
        inv.state = parse_target();
        inv.condition = parse_condition();
        b.invariants.push_back(std::move(inv));
      } else {
        break;
      }
    }
    classify_states(b);
    return b;
  }

  std::string parse_target() {
    expect(Tok::LParen, "'('");
    std::string name = expect_ident().text;
    expect(Tok::RParen, "')'");
    return name;
  }

  Transition parse_transition() {
    Transition t;
    const Token& kw = take();
    t.span = kw.span;
    t.requirement_tags = kw.tags;
    if (kw.text == "tcd") t.delta_param = parse_target();
    t.tc = expect_ident().text;

    expect(Tok::LParen, "'('");
    t.path.push_back(expect_ident().text);
    while (peek().kind == Tok::Comma) {
      take();
      t.path.push_back(expect_ident().text);
    }
    if (t.path.size() < 3) fail("',' (a transition path needs at least 3 states)");
    expect(Tok::RParen, "')'");

    expect(Tok::LBrace, "'{'");
    t.durations.push_back(parse_duration());
    while (peek().kind == Tok::Comma) {
      take();
      t.durations.push_back(parse_duration());
    }
    expect(Tok::RBrace, "'}'");
    return t;
  }

  DurationTerm parse_duration() {
    DurationTerm d;
    d.span = peek().span;
    if (peek().kind == Tok::Nat) {
      d.value = take().nat;
    } else {
      d.value = expect_ident().text;
    }
    return d;
  }

  Condition parse_condition() {
    Condition c;
    c.span = expect(Tok::LBracket, "'['").span;
    do {
      if (!c.atoms.empty()) take();
      StateRef atom;
      const Token& block = expect_ident();
      atom.span = block.span;
      atom.block = block.text;
      expect(Tok::Colon, "':'");
      atom.state = expect_ident().text;
      c.atoms.push_back(std::move(atom));
    } while (peek().kind == Tok::Comma);
    expect(Tok::RBracket, "']'");
    return c;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Model parse_csm(std::string_view text, const std::string& file) {
  return Parser(Lexer(text, file).run()).parse_model();
}

}  // namespace csm
