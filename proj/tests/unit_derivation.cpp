#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "qmeta/derivation.hpp"

using namespace qmeta;

TEST_CASE("the classical chain has the documented eight steps") {
  DerivationTrace trace = derive_classical_defeq("A", "B");
  REQUIRE(trace.size() == 8);
  const auto& lines = trace.lines();
  CHECK(lines[0].judgment == "'A' true iff A");
  CHECK(lines[0].rule == "conv-t");
  CHECK(lines[1].judgment == "'B' true iff B");
  CHECK(lines[2].judgment == "'(A & B)' true iff 'A' true and 'B' true");
  CHECK(lines[2].rule == "t-schema");
  CHECK(lines[3].judgment == "|- 'A' iff A");
  CHECK(lines[3].rule == "assert-form");
  CHECK(lines[3].refs == std::vector<std::size_t>{1});
  CHECK(lines[4].refs == std::vector<std::size_t>{2});
  CHECK(lines[5].judgment == "|- '(A & B)' iff A & B");
  CHECK(lines[5].rule == "conv-t-assert");
  CHECK(lines[6].judgment == "|- '(A & B)' iff |- 'A' and |- 'B'");
  CHECK(lines[6].rule == "t-schema-assert");
  CHECK(lines[6].refs == std::vector<std::size_t>{6});
  CHECK(lines[7].judgment == "|- A & B iff |- A and |- B");
  CHECK(lines[7].rule == "unquote");
  CHECK(lines[7].refs == std::vector<std::size_t>{7});
  CHECK(trace.conclusion() ==
        render_defeq_classical(Prop::atom("A"), Prop::atom("B")));
  CHECK(verify(trace).ok);
}

TEST_CASE("quotation discharge happens exactly at the last step") {
  DerivationTrace trace = derive_classical_defeq("A", "B");
  const auto& lines = trace.lines();
  const std::string& penultimate = lines[lines.size() - 2].judgment;
  std::size_t iff_at = penultimate.find(" iff ");
  REQUIRE(iff_at != std::string::npos);
  CHECK(penultimate.substr(0, iff_at).find('\'') != std::string::npos);
  CHECK(penultimate.substr(iff_at).find('\'') != std::string::npos);
  CHECK(trace.conclusion().find('\'') == std::string::npos);
}

TEST_CASE("the classical chain accepts equal atoms") {
  DerivationTrace trace = derive_classical_defeq("A", "A");
  CHECK(trace.size() == 8);
  CHECK(trace.conclusion() == "|- A & A iff |- A and |- A");
  CHECK(verify(trace).ok);
}

TEST_CASE("classical chain rejects invalid atom names") {
  CHECK_THROWS_AS(derive_classical_defeq("", "B"), InvalidFormula);
  CHECK_THROWS_AS(derive_classical_defeq("a b", "B"), InvalidFormula);
  CHECK_THROWS_AS(derive_classical_defeq("true", "B"), InvalidFormula);
  CHECK_THROWS_AS(derive_classical_defeq("A", "1x"), InvalidFormula);
}

TEST_CASE("the quantum chain has the documented six steps") {
  DerivationTrace trace =
      derive_quantum_defeq(Complex(0.6, 0.0), Complex(0.0, 0.8));
  REQUIRE(trace.size() == 6);
  const auto& lines = trace.lines();
  CHECK(lines[0].judgment == "|-[0.6] 'p0' iff P(p0)");
  CHECK(lines[0].rule == "conv-pt");
  CHECK(lines[1].judgment == "|-[0.8i] 'p1' iff P(p1)");
  CHECK(lines[2].judgment == "p0 [0.6, 0.8i]& p1 := P(p0) & P(p1)");
  CHECK(lines[2].rule == "superpos-def");
  CHECK(lines[3].judgment == "|- '(P(p0) & P(p1))' iff P(p0) & P(p1)");
  CHECK(lines[3].rule == "conv-t-assert");
  CHECK(lines[4].judgment ==
        "|- '(p0 [0.6, 0.8i]& p1)' iff p0 [0.6, 0.8i]& p1");
  CHECK(lines[4].rule == "subst");
  CHECK(lines[4].refs == std::vector<std::size_t>{3, 4});
  CHECK(lines[5].judgment ==
        "|- p0 [0.6, 0.8i]& p1 iff |-[0.6] p0 and |-[0.8i] p1");
  CHECK(lines[5].rule == "pt-schema");
  CHECK(lines[5].refs == std::vector<std::size_t>{5, 1, 2});
  std::vector<Assertion> parts{
      Assertion::graded(Complex(0.6, 0.0), Prop::atom("p0")),
      Assertion::graded(Complex(0.0, 0.8), Prop::atom("p1"))};
  CHECK(trace.conclusion() == render_defeq_quantum(parts));
  CHECK(verify(trace).ok);
}

TEST_CASE("the quantum chain enforces the meta-data constraint") {
  CHECK_THROWS_AS(derive_quantum_defeq(Complex(1.0, 0.0), Complex(1.0, 0.0)),
                  NormalizationViolation);
  CHECK_THROWS_AS(derive_quantum_defeq(Complex(0.6, 0.0), Complex(0.6, 0.0)),
                  NormalizationViolation);
  CHECK_NOTHROW(derive_quantum_defeq(Complex(1.0, 0.0), Complex(0.0, 0.0)));
  double r = std::sqrt(0.5);
  CHECK_NOTHROW(derive_quantum_defeq(Complex(r, 0.0), Complex(0.0, r)));
}

TEST_CASE("rendered traces number lines and cite premises") {
  DerivationTrace trace =
      derive_quantum_defeq(Complex(0.6, 0.0), Complex(0.0, 0.8));
  std::string text = trace.rendered();
  CHECK(text.find("1. |-[0.6] 'p0' iff P(p0)   [conv-pt]\n") == 0);
  CHECK(text.find("5. |- '(p0 [0.6, 0.8i]& p1)' iff p0 [0.6, 0.8i]& p1   "
                  "[subst from 3,4]\n") != std::string::npos);
  CHECK(text.find("[pt-schema from 5,1,2]\n") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("the verifier rejects tampered traces") {
  DerivationTrace classical = derive_classical_defeq("A", "B");
  DerivationTrace quantum =
      derive_quantum_defeq(Complex(0.6, 0.0), Complex(0.0, 0.8));

  SECTION("a judgment edit breaks the cited rule") {
    auto lines = classical.lines();
    lines[0].judgment = "'A' true iff B";  // names a different formula
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.line == 1);
  }
  SECTION("swapping a conclusion side breaks the schema") {
    auto lines = classical.lines();
    lines[7].judgment = "|- A & B iff |- B and |- A";
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.line == 8);
  }
  SECTION("a wrong rule tag is rejected") {
    auto lines = classical.lines();
    lines[2].rule = "conv-t";
    CHECK_FALSE(verify(lines).ok);
  }
  SECTION("an unknown rule tag is rejected") {
    auto lines = classical.lines();
    lines[2].rule = "modus-ponens";
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("unknown rule") != std::string::npos);
  }
  SECTION("forward references are rejected") {
    auto lines = classical.lines();
    lines[3].refs = {5};
    CHECK_FALSE(verify(lines).ok);
  }
  SECTION("self references are rejected") {
    auto lines = classical.lines();
    lines[3].refs = {4};
    CHECK_FALSE(verify(lines).ok);
  }
  SECTION("wrong premise counts are rejected") {
    auto lines = classical.lines();
    lines[3].refs = {};
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("premise") != std::string::npos);
  }
  SECTION("a degree edit breaks the quantum schema") {
    auto lines = quantum.lines();
    lines[5].judgment = "|- p0 [0.6, 0.8i]& p1 iff |-[0.8i] p0 and |-[0.6] p1";
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.line == 6);
  }
  SECTION("an unnormalized definition is rejected") {
    auto lines = quantum.lines();
    lines[2].judgment = "p0 [1, 1]& p1 := P(p0) & P(p1)";
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.line == 3);
  }
  SECTION("a premise pointing at the wrong line is rejected") {
    auto lines = quantum.lines();
    lines[5].refs = {5, 2, 1};  // conv-pt premises swapped
    CHECK_FALSE(verify(lines).ok);
  }
  SECTION("an unparseable judgment is rejected") {
    auto lines = classical.lines();
    lines[4].judgment = "|- '' iff";
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.line == 5);
    CHECK(r.reason.find("parse") != std::string::npos);
  }
  SECTION("conv-pt cannot grade above the unit disk") {
    std::vector<TraceLine> lines{{"|-[1.5] 'p0' iff P(p0)", "conv-pt", {}}};
    VerifyResult r = verify(lines);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("squared modulus") != std::string::npos);
  }
  SECTION("quoting the pt-schema conclusion is rejected") {
    auto lines = quantum.lines();
    lines[5].judgment =
        "|- '(p0 [0.6, 0.8i]& p1)' iff |-[0.6] p0 and |-[0.8i] p1";
    CHECK_FALSE(verify(lines).ok);
  }
}

TEST_CASE("traces must be non-empty") {
  CHECK_THROWS_AS(DerivationTrace({}), ArityError);
}

TEST_CASE("verification accepts an independently assembled trace") {
  // the verifier checks what lines say, not which helper built them
  std::vector<TraceLine> lines{
      {"'x' true iff x", "conv-t", {}},
      {"|- 'x' iff x", "assert-form", {1}},
  };
  CHECK(verify(lines).ok);
}
