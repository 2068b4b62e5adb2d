#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "qmeta/judgment.hpp"

using namespace qmeta;

namespace {

std::string round_trip(const std::string& text) {
  return to_text(parse_judgment(text));
}

}  // namespace

TEST_CASE("truth-claim biconditionals") {
  Judgment j = parse_judgment("'A' true iff A");
  CHECK(j.kind == Judgment::Kind::Biconditional);
  REQUIRE(j.lhs.size() == 1);
  REQUIRE(j.rhs.size() == 1);
  const auto* t = std::get_if<TruthClaim>(&j.lhs[0]);
  REQUIRE(t != nullptr);
  CHECK(t->named == Prop::atom("A"));
  const auto* b = std::get_if<BareClaim>(&j.rhs[0]);
  REQUIRE(b != nullptr);
  CHECK(b->prop == Prop::atom("A"));
  CHECK(to_text(j) == "'A' true iff A");
}

TEST_CASE("assert claims carry degree and quotation") {
  Judgment j = parse_judgment("|-[0.6] 'p0' iff P(p0)");
  const auto* a = std::get_if<AssertClaim>(&j.lhs[0]);
  REQUIRE(a != nullptr);
  CHECK(a->degree == Complex(0.6, 0.0));
  CHECK(a->quoted);
  CHECK(a->subject == Prop::atom("p0"));
  CHECK(to_text(j) == "|-[0.6] 'p0' iff P(p0)");

  Judgment plain = parse_judgment("|- A & B iff |- A and |- B");
  const auto* whole = std::get_if<AssertClaim>(&plain.lhs[0]);
  REQUIRE(whole != nullptr);
  CHECK_FALSE(whole->quoted);
  CHECK(whole->degree == Complex(1.0, 0.0));
  REQUIRE(plain.rhs.size() == 2);
  CHECK(to_text(plain) == "|- A & B iff |- A and |- B");
}

TEST_CASE("definitions") {
  Judgment j = parse_judgment("p0 [0.6, 0.8i]& p1 := P(p0) & P(p1)");
  CHECK(j.kind == Judgment::Kind::Definition);
  const auto* s = std::get_if<BareClaim>(&j.lhs[0]);
  REQUIRE(s != nullptr);
  CHECK(s->prop.kind() == Prop::Kind::Superposition);
  CHECK(to_text(j) == "p0 [0.6, 0.8i]& p1 := P(p0) & P(p1)");
  SECTION("only bare formulas can be defined") {
    CHECK_THROWS_AS(parse_judgment("|- A := B"), SyntaxError);
    CHECK_THROWS_AS(parse_judgment("'A' true := B"), SyntaxError);
    CHECK_THROWS_AS(parse_judgment("A and B := C"), SyntaxError);
  }
}

TEST_CASE("canonical renderings are parse-stable") {
  const char* lines[] = {
      "'A' true iff A",
      "'(A & B)' true iff 'A' true and 'B' true",
      "|- 'A' iff A",
      "|- '(A & B)' iff A & B",
      "|- '(A & B)' iff |- 'A' and |- 'B'",
      "|- A & B iff |- A and |- B",
      "|-[0.6] 'p0' iff P(p0)",
      "|-[0.8i] 'p1' iff P(p1)",
      "p0 [0.6, 0.8i]& p1 := P(p0) & P(p1)",
      "|- '(P(p0) & P(p1))' iff P(p0) & P(p1)",
      "|- '(p0 [0.6, 0.8i]& p1)' iff p0 [0.6, 0.8i]& p1",
      "|- p0 [0.6, 0.8i]& p1 iff |-[0.6] p0 and |-[0.8i] p1",
  };
  for (const char* line : lines) {
    INFO("line: " << line);
    CHECK(round_trip(line) == line);
  }
}

TEST_CASE("structural equality of judgments") {
  CHECK(parse_judgment("'A' true iff A") == parse_judgment("'A'  true  iff A"));
  CHECK_FALSE(parse_judgment("'A' true iff A") ==
              parse_judgment("'B' true iff B"));
  CHECK_FALSE(parse_judgment("|- 'A' iff A") == parse_judgment("|- A iff A"));
  CHECK_FALSE(parse_judgment("|-[0.6] p0 iff P(p0)") ==
              parse_judgment("|-[0.6i] p0 iff P(p0)"));
}

TEST_CASE("judgment parse errors") {
  CHECK_THROWS_AS(parse_judgment("'A' true"), SyntaxError);       // no iff
  CHECK_THROWS_AS(parse_judgment("A iff"), SyntaxError);          // no rhs
  CHECK_THROWS_AS(parse_judgment("'A' iff A"), SyntaxError);      // missing true
  CHECK_THROWS_AS(parse_judgment("'A true iff A"), SyntaxError);  // open quote
  CHECK_THROWS_AS(parse_judgment("|- A iff A extra"), SyntaxError);
  CHECK_THROWS_AS(parse_judgment("A := B := C"), SyntaxError);
  CHECK_THROWS_AS(parse_judgment("iff A"), SyntaxError);
}
