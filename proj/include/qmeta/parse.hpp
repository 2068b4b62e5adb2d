#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmeta/ast.hpp"

namespace qmeta {
namespace detail {

enum class Tok {
  End,
  Ident,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Amp,
  Star,
  Tilde,
  Arrow,
  Plus,
  Minus,
  Turnstile,
  Quote,
  Define,
};

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Amp: return "'&'";
    case Tok::Star: return "'*'";
    case Tok::Tilde: return "'~'";
    case Tok::Arrow: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Turnstile: return "'|-'";
    case Tok::Quote: return "quote";
    case Tok::Define: return "':='";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;  // identifier spelling or number lexeme
  double number = 0.0;
};

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Single tokenizer shared by propositions, assertions, judgments and the
/// CLI's complex literals.
class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { tokens_ = lex(); }

  const std::vector<Token>& tokens() const { return tokens_; }

private:
  std::vector<Token> lex() {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text_.size();
    while (i < n) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (is_ident_start(c)) {
        while (i < n && is_ident_char(text_[i])) ++i;
        out.push_back({Tok::Ident, start, text_.substr(start, i - start)});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        while (i < n && (std::isdigit(static_cast<unsigned char>(text_[i])) ||
                         text_[i] == '.'))
          ++i;
        // exponent part, consumed only when well-formed
        if (i < n && (text_[i] == 'e' || text_[i] == 'E')) {
          std::size_t j = i + 1;
          if (j < n && (text_[j] == '+' || text_[j] == '-')) ++j;
          if (j < n && std::isdigit(static_cast<unsigned char>(text_[j]))) {
            i = j;
            while (i < n && std::isdigit(static_cast<unsigned char>(text_[i])))
              ++i;
          }
        }
        std::string_view lexeme = text_.substr(start, i - start);
        double value = 0.0;
        auto res =
            std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
        if (res.ec != std::errc() || res.ptr != lexeme.data() + lexeme.size() ||
            !std::isfinite(value))
          throw SyntaxError(start, {"number"},
                            "malformed number '" + std::string(lexeme) + "'");
        out.push_back({Tok::Number, start, lexeme, value});
        continue;
      }
      switch (c) {
        case '(': out.push_back({Tok::LParen, start, {}}); ++i; break;
        case ')': out.push_back({Tok::RParen, start, {}}); ++i; break;
        case '[': out.push_back({Tok::LBracket, start, {}}); ++i; break;
        case ']': out.push_back({Tok::RBracket, start, {}}); ++i; break;
        case ',': out.push_back({Tok::Comma, start, {}}); ++i; break;
        case '&': out.push_back({Tok::Amp, start, {}}); ++i; break;
        case '*': out.push_back({Tok::Star, start, {}}); ++i; break;
        case '~': out.push_back({Tok::Tilde, start, {}}); ++i; break;
        case '+': out.push_back({Tok::Plus, start, {}}); ++i; break;
        case '\'': out.push_back({Tok::Quote, start, {}}); ++i; break;
        case '-':
          if (i + 1 < n && text_[i + 1] == '>') {
            out.push_back({Tok::Arrow, start, {}});
            i += 2;
          } else {
            out.push_back({Tok::Minus, start, {}});
            ++i;
          }
          break;
        case '|':
          if (i + 1 < n && text_[i + 1] == '-') {
            out.push_back({Tok::Turnstile, start, {}});
            i += 2;
          } else {
            throw SyntaxError(start, {"'|-'"}, "stray '|'");
          }
          break;
        case ':':
          if (i + 1 < n && text_[i + 1] == '=') {
            out.push_back({Tok::Define, start, {}});
            i += 2;
          } else {
            throw SyntaxError(start, {"':='"}, "stray ':'");
          }
          break;
        default:
          throw SyntaxError(start, {},
                            std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({Tok::End, n, {}});
    return out;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

// Words with meaning in the judgment grammar; rejected as atom names.
inline bool is_reserved_word(std::string_view s) {
  return s == "and" || s == "iff" || s == "true";
}

class PropParser {
public:
  explicit PropParser(std::string_view text) : lexer_(text) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    const auto& ts = lexer_.tokens();
    return i < ts.size() ? ts[i] : ts.back();
  }

  const Token& advance() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind == kind) {
      advance();
      return true;
    }
    return false;
  }

  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind)
      throw SyntaxError(t.offset, {tok_name(kind)},
                        std::string("expected ") + tok_name(kind) +
                            ", found " + tok_name(t.kind));
    return advance();
  }

  void expect_end() {
    const Token& t = peek();
    if (t.kind != Tok::End)
      throw SyntaxError(t.offset, {"end of input"},
                        std::string("trailing input, found ") +
                            tok_name(t.kind));
  }

  /// prop := implies
  Prop parse_prop() { return parse_implies(); }

  /// implies := conj ('->' implies)?   (right-associative)
  Prop parse_implies() {
    Prop left = parse_conj();
    if (accept(Tok::Arrow)) {
      std::size_t at = peek().offset;
      Prop right = parse_implies();
      return build(at, [&] { return Prop::luka_implies(left, right); });
    }
    return left;
  }

  /// conj := strong ('&' strong)*   (left-associative)
  Prop parse_conj() {
    Prop p = parse_strong();
    while (peek().kind == Tok::Amp) {
      std::size_t at = advance().offset;
      Prop rhs = parse_strong();
      p = build(at, [&] { return Prop::classical_and(p, rhs); });
    }
    return p;
  }

  /// strong := unary ('*' unary)*   (left-associative)
  Prop parse_strong() {
    Prop p = parse_unary();
    while (peek().kind == Tok::Star) {
      std::size_t at = advance().offset;
      Prop rhs = parse_unary();
      p = build(at, [&] { return Prop::luka_strong_and(p, rhs); });
    }
    return p;
  }

  /// unary := '~' unary | postfix
  Prop parse_unary() {
    if (peek().kind == Tok::Tilde) {
      std::size_t at = advance().offset;
      Prop operand = parse_unary();
      return build(at, [&] { return Prop::luka_neg(operand); });
    }
    return parse_postfix();
  }

  /// postfix := primary ('[' complex (',' complex)+ ']' '&' operand-list)*
  ///
  /// The bracketed degree list binds to the preceding operand and forms a
  /// superposition; the remaining operands follow the '&', comma-separated,
  /// exactly one fewer than there are degrees.
  Prop parse_postfix() {
    Prop p = parse_primary();
    while (peek().kind == Tok::LBracket) {
      std::size_t at = advance().offset;
      std::vector<Complex> degrees;
      degrees.push_back(parse_complex());
      expect(Tok::Comma);
      degrees.push_back(parse_complex());
      while (accept(Tok::Comma)) degrees.push_back(parse_complex());
      expect(Tok::RBracket);
      expect(Tok::Amp);
      std::vector<Prop> operands;
      operands.push_back(p);
      operands.push_back(parse_postfix());
      for (std::size_t i = 2; i < degrees.size(); ++i) {
        expect(Tok::Comma);
        operands.push_back(parse_postfix());
      }
      p = build(at,
                [&] { return Prop::superposition(degrees, operands); });
    }
    return p;
  }

  /// primary := atom | 'P' '(' prop ')' | '(' prop ')'
  Prop parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      if (is_reserved_word(t.text))
        throw SyntaxError(t.offset, {"atom"},
                          "reserved word '" + std::string(t.text) +
                              "' cannot be used as an atom");
      advance();
      if (t.text == "P" && peek().kind == Tok::LParen) {
        advance();
        Prop inner = parse_prop();
        expect(Tok::RParen);
        return build(t.offset, [&] { return Prop::probably(inner); });
      }
      return Prop::atom(std::string(t.text));
    }
    if (t.kind == Tok::LParen) {
      advance();
      Prop p = parse_prop();
      expect(Tok::RParen);
      return p;
    }
    throw SyntaxError(t.offset, {"atom", "'('", "'P('", "'~'"},
                      std::string("expected a proposition, found ") +
                          tok_name(t.kind));
  }

  /// complex := ['-'] number 'i'? | ['-'] number ('+'|'-') number 'i'
  Complex parse_complex() {
    bool negative = accept(Tok::Minus);
    const Token& first = expect(Tok::Number);
    double a = negative ? -first.number : first.number;
    if (peek().kind == Tok::Ident && peek().text == "i") {
      advance();
      return Complex(0.0, a);
    }
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool imag_negative = advance().kind == Tok::Minus;
      const Token& second = expect(Tok::Number);
      const Token& suffix = peek();
      if (suffix.kind != Tok::Ident || suffix.text != "i")
        throw SyntaxError(suffix.offset, {"'i'"},
                          "imaginary part must end in 'i'");
      advance();
      return Complex(a, imag_negative ? -second.number : second.number);
    }
    return Complex(a, 0.0);
  }

  /// assertion := '|-' prop | '|-' '[' complex ']' prop
  Assertion parse_assertion() {
    expect(Tok::Turnstile);
    if (accept(Tok::LBracket)) {
      Complex degree = parse_complex();
      expect(Tok::RBracket);
      Prop subject = parse_prop();
      return Assertion::graded(degree, subject);
    }
    Prop subject = parse_prop();
    return Assertion::classical(subject);
  }

private:
  // Formation-rule failures inside a parse are reported as syntax errors at
  // the offending construct.
  template <class Fn>
  Prop build(std::size_t offset, Fn&& fn) {
    try {
      return fn();
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(offset, {}, e.what());
    }
  }

  Lexer lexer_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a proposition; the whole string must be consumed.
inline Prop parse_proposition(std::string_view text) {
  detail::PropParser parser(text);
  Prop p = parser.parse_prop();
  parser.expect_end();
  return p;
}

/// Parses "|- p" or "|-[degree] p"; the whole string must be consumed.
/// Throws DegreeOutOfRange when |degree|^2 exceeds 1 + input tolerance.
inline Assertion parse_assertion(std::string_view text) {
  detail::PropParser parser(text);
  Assertion a = parser.parse_assertion();
  parser.expect_end();
  return a;
}

/// Parses a standalone complex literal ("0.6", "0.8i", "0.5-0.5i").
inline Complex parse_complex(std::string_view text) {
  detail::PropParser parser(text);
  Complex z = parser.parse_complex();
  parser.expect_end();
  return z;
}

}  // namespace qmeta
