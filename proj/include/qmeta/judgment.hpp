#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmeta/ast.hpp"
#include "qmeta/parse.hpp"
#include "qmeta/print.hpp"

namespace qmeta {

/// "'p' true": a truth claim about a named proposition.
struct TruthClaim {
  Prop named;

  friend bool operator==(const TruthClaim& a, const TruthClaim& b) {
    return a.named == b.named;
  }
};

/// "|- p", "|-[l] p", "|- 'p'" or "|-[l] 'p'": an assertion, graded or
/// classical, of a proposition or of its name.
struct AssertClaim {
  Complex degree;
  bool quoted;
  Prop subject;

  friend bool operator==(const AssertClaim& a, const AssertClaim& b) {
    return a.degree == b.degree && a.quoted == b.quoted &&
           a.subject == b.subject;
  }
};

/// A bare object-language proposition standing in a judgment.
struct BareClaim {
  Prop prop;

  friend bool operator==(const BareClaim& a, const BareClaim& b) {
    return a.prop == b.prop;
  }
};

using MetaAtom = std::variant<TruthClaim, AssertClaim, BareClaim>;

/// One line of metalanguage: either a biconditional between two "and"-joined
/// claim lists, or a definition between two propositions.
struct Judgment {
  enum class Kind { Biconditional, Definition };

  Kind kind;
  std::vector<MetaAtom> lhs;
  std::vector<MetaAtom> rhs;

  friend bool operator==(const Judgment& a, const Judgment& b) {
    return a.kind == b.kind && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

inline std::string to_text(const MetaAtom& atom) {
  if (const auto* t = std::get_if<TruthClaim>(&atom))
    return to_text(quote(t->named)) + " true";
  if (const auto* a = std::get_if<AssertClaim>(&atom)) {
    std::string out = "|-";
    if (a->degree != Complex(1.0, 0.0))
      out += "[" + to_text(a->degree) + "]";
    out += " ";
    out += a->quoted ? to_text(quote(a->subject)) : to_text(a->subject);
    return out;
  }
  return to_text(std::get<BareClaim>(atom).prop);
}

inline std::string to_text(const std::vector<MetaAtom>& list) {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out += " and ";
    out += to_text(list[i]);
  }
  return out;
}

inline std::string to_text(const Judgment& j) {
  const char* link = j.kind == Judgment::Kind::Definition ? " := " : " iff ";
  return to_text(j.lhs) + link + to_text(j.rhs);
}

namespace detail {

class JudgmentParser : public PropParser {
public:
  explicit JudgmentParser(std::string_view text) : PropParser(text) {}

  Judgment parse_judgment() {
    std::vector<MetaAtom> lhs = parse_meta_list();
    if (peek().kind == Tok::Define) {
      advance();
      if (lhs.size() != 1 || !std::holds_alternative<BareClaim>(lhs[0]))
        throw SyntaxError(peek().offset, {},
                          "a definition needs a bare proposition on the left");
      Prop rhs = parse_prop();
      return Judgment{Judgment::Kind::Definition, std::move(lhs),
                      {BareClaim{std::move(rhs)}}};
    }
    expect_keyword("iff");
    std::vector<MetaAtom> rhs = parse_meta_list();
    return Judgment{Judgment::Kind::Biconditional, std::move(lhs),
                    std::move(rhs)};
  }

private:
  std::vector<MetaAtom> parse_meta_list() {
    std::vector<MetaAtom> out;
    out.push_back(parse_meta_atom());
    while (at_keyword("and")) {
      advance();
      out.push_back(parse_meta_atom());
    }
    return out;
  }

  MetaAtom parse_meta_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Turnstile) {
      advance();
      Complex degree(1.0, 0.0);
      if (accept(Tok::LBracket)) {
        degree = parse_complex();
        expect(Tok::RBracket);
      }
      if (peek().kind == Tok::Quote)
        return AssertClaim{degree, true, parse_name()};
      return AssertClaim{degree, false, parse_prop()};
    }
    if (t.kind == Tok::Quote) {
      Prop named = parse_name();
      expect_keyword("true");
      return TruthClaim{std::move(named)};
    }
    return BareClaim{parse_prop()};
  }

  Prop parse_name() {
    expect(Tok::Quote);
    Prop named = parse_prop();
    expect(Tok::Quote);
    return named;
  }

  bool at_keyword(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  void expect_keyword(std::string_view word) {
    if (!at_keyword(word))
      throw SyntaxError(peek().offset, {"'" + std::string(word) + "'"},
                        "expected '" + std::string(word) + "', found " +
                            tok_name(peek().kind));
    advance();
  }
};

}  // namespace detail

/// Parses one judgment line; the whole string must be consumed.
inline Judgment parse_judgment(std::string_view text) {
  detail::JudgmentParser parser(text);
  Judgment j = parser.parse_judgment();
  parser.expect_end();
  return j;
}

}  // namespace qmeta
