#include "zroupoid/parser.hpp"

#include <optional>

#include "zroupoid/error.hpp"

namespace zroupoid {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += (i + 1 == expected.size()) ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error("syntax error at byte " + std::to_string(offset) + ": expected " + join_expected(expected) +
            ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Ident, Zero, LParen, RParen, Prime, Arrow, Eq, Leq, Neq, Less, Amp, Implies, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Prime: return "'''";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::Leq: return "'<='";
    case Tok::Neq: return "'!='";
    case Tok::Less: return "'<'";
    case Tok::Amp: return "'&'";
    case Tok::Implies: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

constexpr std::string_view kApprox = "\xE2\x89\x88";  // U+2248

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, {}};
    const char c = src_[pos_];
    auto two = [&](char second) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == second; };
    auto emit = [&](Tok kind, std::size_t len) {
      pos_ += len;
      return Token{kind, start, src_.substr(start, len)};
    };
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && is_ident_tail(src_[end])) ++end;
      return emit(Tok::Ident, end - pos_);
    }
    switch (c) {
      case '0': return emit(Tok::Zero, 1);
      case '(': return emit(Tok::LParen, 1);
      case ')': return emit(Tok::RParen, 1);
      case '\'': return emit(Tok::Prime, 1);
      case '&': return emit(Tok::Amp, 1);
      case '-':
        if (two('>')) return emit(Tok::Arrow, 2);
        break;
      case '=':
        return two('>') ? emit(Tok::Implies, 2) : emit(Tok::Eq, 1);
      case '<':
        return two('=') ? emit(Tok::Leq, 2) : emit(Tok::Less, 1);
      case '!':
        if (two('=')) return emit(Tok::Neq, 2);
        break;
      default:
        if (src_.substr(pos_, kApprox.size()) == kApprox) return emit(Tok::Eq, kApprox.size());
        break;
    }
    throw SyntaxError(start, {"a token"}, "unexpected character '" + std::string(1, c) + "'");
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_ident_tail(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src), tok_(lexer_.next()) {}

  Term term() {
    Term left = factor();
    if (accept(Tok::Arrow)) return Term::arrow(std::move(left), term());
    return left;
  }

  Statement statement() {
    std::vector<Premise> literals;
    literal(literals, /*as_premise=*/true);
    while (accept(Tok::Amp)) literal(literals, true);
    if (accept(Tok::Implies)) {
      std::vector<Premise> conclusion;
      literal(conclusion, /*as_premise=*/false);
      return QuasiIdentity{std::move(literals), std::move(conclusion.front().equation)};
    }
    if (literals.size() != 1 || literals.front().negated) {
      fail({describe(Tok::Implies)});
    }
    return std::move(literals.front().equation);
  }

  void expect_end(std::vector<std::string> expected) {
    if (tok_.kind != Tok::End) fail(std::move(expected));
  }

 private:
  Term factor() {
    Term t = atom();
    while (accept(Tok::Prime)) t = Term::prime(std::move(t));
    return t;
  }

  Term atom() {
    switch (tok_.kind) {
      case Tok::Ident: {
        Term v = Term::var(std::string(tok_.text));
        advance();
        return v;
      }
      case Tok::Zero:
        advance();
        return Term::zero();
      case Tok::LParen: {
        advance();
        Term inner = term();
        if (!accept(Tok::RParen)) fail({describe(Tok::Arrow), describe(Tok::Prime), describe(Tok::RParen)});
        return inner;
      }
      default:
        fail({describe(Tok::Ident), describe(Tok::Zero), describe(Tok::LParen)});
    }
  }

  void literal(std::vector<Premise>& out, bool as_premise) {
    Term lhs = term();
    const Tok rel = tok_.kind;
    switch (rel) {
      case Tok::Eq:
      case Tok::Leq:
        break;
      case Tok::Neq:
      case Tok::Less:
        if (as_premise) break;
        [[fallthrough]];
      default: {
        std::vector<std::string> expected{describe(Tok::Arrow), describe(Tok::Prime), describe(Tok::Eq),
                                          describe(Tok::Leq)};
        if (as_premise) {
          expected.push_back(describe(Tok::Neq));
          expected.push_back(describe(Tok::Less));
        }
        fail(std::move(expected));
      }
    }
    advance();
    Term rhs = term();
    switch (rel) {
      case Tok::Eq:
        out.push_back({Identity{std::move(lhs), std::move(rhs)}, false});
        break;
      case Tok::Leq:
        out.push_back({below(lhs, rhs), false});
        break;
      case Tok::Neq:
        out.push_back({Identity{std::move(lhs), std::move(rhs)}, true});
        break;
      case Tok::Less:
        out.push_back({below(lhs, rhs), false});
        out.push_back({Identity{std::move(lhs), std::move(rhs)}, true});
        break;
      default:
        break;
    }
  }

  bool accept(Tok kind) {
    if (tok_.kind != kind) return false;
    advance();
    return true;
  }

  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const std::string found =
        tok_.kind == Tok::End ? std::string(describe(Tok::End)) : "'" + std::string(tok_.text) + "'";
    throw SyntaxError(tok_.offset, std::move(expected), found);
  }

  Lexer lexer_;
  Token tok_;
};

}  // namespace

Term parse_term(std::string_view input) {
  Parser p(input);
  Term t = p.term();
  p.expect_end({describe(Tok::Arrow), describe(Tok::Prime), describe(Tok::End)});
  return t;
}

Statement parse_statement(std::string_view input) {
  Parser p(input);
  Statement s = p.statement();
  if (std::holds_alternative<Identity>(s)) {
    p.expect_end({describe(Tok::Arrow), describe(Tok::Prime), describe(Tok::Amp), describe(Tok::Implies),
                  describe(Tok::End)});
  } else {
    p.expect_end({describe(Tok::Arrow), describe(Tok::Prime), describe(Tok::End)});
  }
  return s;
}

}  // namespace zroupoid
