#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "qmeta/parse.hpp"
#include "qmeta/print.hpp"
#include "qmeta/script.hpp"

using namespace qmeta;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("scripts parse into a basis and labeled assertions") {
  Script s = parse_script(
      "# two-outcome demo\n"
      "basis: p0 p1\n"
      "\n"
      "first: |- p0\n"
      "|-[0.8i] p1   # graded, auto-labeled\n"
      "last: |- p0 [0.6, 0.8i]& p1\n");
  CHECK(s.basis == std::vector<std::string>{"p0", "p1"});
  REQUIRE(s.statements.size() == 3);
  CHECK(s.statements[0].label == "first");
  CHECK(s.statements[0].assertion == Assertion::classical(Prop::atom("p0")));
  CHECK(s.statements[1].label == "s2");
  CHECK(s.statements[1].assertion ==
        Assertion::graded(Complex(0.0, 0.8), Prop::atom("p1")));
  CHECK(s.statements[2].label == "last");
  CHECK(to_text(s.statements[2].assertion) == "|- p0 [0.6, 0.8i]& p1");
}

TEST_CASE("script lines tolerate indentation and carriage returns") {
  Script s = parse_script("  basis: a b\r\n\t|- a\r\n  x: |- b  \r\n");
  CHECK(s.basis == std::vector<std::string>{"a", "b"});
  REQUIRE(s.statements.size() == 2);
  CHECK(s.statements[0].label == "s1");
  CHECK(s.statements[1].label == "x");
  SECTION("no trailing newline") {
    Script t = parse_script("basis: a\n|- a");
    CHECK(t.statements.size() == 1);
  }
}

TEST_CASE("the basis declaration comes first and is validated") {
  SECTION("assertions before the basis are rejected") {
    CHECK_THROWS_WITH(parse_script("|- p0\nbasis: p0\n"),
                      ContainsSubstring("script must declare 'basis:"));
  }
  SECTION("an empty script has no basis") {
    CHECK_THROWS_AS(parse_script(""), SyntaxError);
    CHECK_THROWS_AS(parse_script("# only a comment\n\n"), SyntaxError);
  }
  SECTION("basis atoms are identifiers") {
    CHECK_THROWS_WITH(parse_script("basis: p0 1x\n"),
                      ContainsSubstring("'1x' is not a valid atom name"));
    CHECK_THROWS_AS(parse_script("basis: p0 true\n"), SyntaxError);
    CHECK_THROWS_AS(parse_script("basis:\n|- p0\n"), SyntaxError);
  }
  SECTION("duplicate declarations are rejected") {
    CHECK_THROWS_AS(parse_script("basis: p0 p0\n"), DuplicateOperand);
  }
}

TEST_CASE("statement labels") {
  SECTION("duplicate labels are rejected") {
    CHECK_THROWS_AS(parse_script("basis: a\nx: |- a\nx: |- a\n"),
                    DuplicateOperand);
  }
  SECTION("auto-labels can collide with explicit ones") {
    CHECK_THROWS_AS(parse_script("basis: a\n|- a\ns1: |- a\n"),
                    DuplicateOperand);
  }
  SECTION("a definition marker is not a label") {
    try {
      parse_script("basis: a\nx:= |- a\n");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 9);
    }
  }
  SECTION("a non-identifier head is part of the assertion") {
    CHECK_THROWS_AS(parse_script("basis: a\n2x: |- a\n"), SyntaxError);
  }
}

TEST_CASE("statements may only use declared atoms") {
  CHECK_THROWS_WITH(parse_script("basis: p0\n|- p1\n"),
                    ContainsSubstring("'p1' is not declared in the basis"));
  CHECK_THROWS_AS(parse_script("basis: p0\n|- p0 [0.6, 0.8i]& p1\n"),
                  UnknownAtom);
  CHECK_NOTHROW(parse_script("basis: p0 p1\n|- p0\n"));
}

TEST_CASE("syntax errors carry file-level byte offsets") {
  try {
    parse_script("basis: p0 p1\nx: |-[0.6 p0\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 23);
    CHECK_THAT(e.what(), ContainsSubstring("at byte 23"));
  }
  SECTION("offsets account for indentation") {
    try {
      parse_script("basis: p0\n  |- p0 &\n");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 19);
    }
  }
}

TEST_CASE("atom names are collected in reading order") {
  CHECK(atom_names(parse_proposition("A & B & A")) ==
        std::vector<std::string>{"A", "B", "A"});
  CHECK(atom_names(parse_proposition("p0 [0.6, 0.8i]& p1")) ==
        std::vector<std::string>{"p0", "p1"});
  CHECK(atom_names(parse_proposition("~P(a) -> P(b) * P(a)")) ==
        std::vector<std::string>{"a", "b", "a"});
}
