#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "qmeta/ast.hpp"

using namespace qmeta;

TEST_CASE("atoms and conjunctions") {
  Prop a = Prop::atom("A");
  Prop b = Prop::atom("B");
  CHECK(a.is_atom());
  CHECK(a.atom_name() == "A");
  CHECK(a == Prop::atom("A"));
  CHECK(a != b);
  Prop c = Prop::classical_and(a, b);
  CHECK(c.kind() == Prop::Kind::ClassicalAnd);
  CHECK(c.left() == a);
  CHECK(c.right() == b);
  CHECK(c == Prop::classical_and(Prop::atom("A"), Prop::atom("B")));
  CHECK_THROWS_AS(Prop::atom(""), InvalidFormula);
}

TEST_CASE("superposition formation") {
  Prop p0 = Prop::atom("p0");
  Prop p1 = Prop::atom("p1");
  std::vector<Complex> degrees{{0.6, 0.0}, {0.0, 0.8}};
  Prop s = Prop::superposition(degrees, {p0, p1});
  CHECK(s.kind() == Prop::Kind::Superposition);
  CHECK(s.part_count() == 2);
  CHECK(s.degrees() == degrees);
  CHECK(s.operands()[1] == p1);
  CHECK(s.contains_superposition());
  CHECK_FALSE(p0.contains_superposition());

  SECTION("arity errors") {
    CHECK_THROWS_AS(Prop::superposition({{1.0, 0.0}}, {p0}), ArityError);
    CHECK_THROWS_AS(Prop::superposition({{0.6, 0.0}}, {p0, p1}), ArityError);
  }
  SECTION("degrees must be finite") {
    double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Prop::superposition({{inf, 0.0}, {0.0, 0.8}}, {p0, p1}),
                    InvalidFormula);
  }
  SECTION("degree equality is exact") {
    Prop t = Prop::superposition({{0.6, 0.0}, {0.0, 0.8 + 1e-17}}, {p0, p1});
    CHECK(t == s);  // 0.8 + 1e-17 rounds to 0.8
    Prop u = Prop::superposition({{0.6, 0.0}, {0.0, 0.8 + 1e-15}}, {p0, p1});
    CHECK(u != s);
  }
}

TEST_CASE("the fuzzy modality wraps Boolean bases only") {
  Prop a = Prop::atom("a");
  Prop b = Prop::atom("b");
  Prop conj = Prop::classical_and(a, b);
  CHECK(Prop::probably(a).kind() == Prop::Kind::Probably);
  CHECK(Prop::probably(conj).inner() == conj);
  CHECK(a.is_boolean_base());
  CHECK(conj.is_boolean_base());
  Prop pa = Prop::probably(a);
  CHECK_FALSE(pa.is_boolean_base());
  CHECK_THROWS_AS(Prop::probably(pa), InvalidFormula);
  Prop s = Prop::superposition({{1.0, 0.0}, {0.0, 0.0}}, {a, b});
  CHECK_THROWS_AS(Prop::probably(s), InvalidFormula);
}

TEST_CASE("many-valued connectives apply to P-formulas only") {
  Prop pa = Prop::probably(Prop::atom("a"));
  Prop pb = Prop::probably(Prop::atom("b"));
  CHECK(pa.is_luka_formula());
  CHECK(Prop::luka_neg(pa).is_luka_formula());
  CHECK(Prop::luka_strong_and(pa, pb).is_luka_formula());
  CHECK(Prop::luka_implies(Prop::luka_neg(pa), pb).is_luka_formula());
  Prop a = Prop::atom("a");
  CHECK_FALSE(a.is_luka_formula());
  CHECK_THROWS_AS(Prop::luka_neg(a), InvalidFormula);
  CHECK_THROWS_AS(Prop::luka_strong_and(pa, a), InvalidFormula);
  CHECK_THROWS_AS(Prop::luka_implies(a, pb), InvalidFormula);
}

TEST_CASE("names quote propositions structurally") {
  Prop a = Prop::atom("A");
  Prop b = Prop::atom("B");
  CHECK(quote(a) == quote(Prop::atom("A")));
  CHECK(quote(a) != quote(b));
  Prop c1 = Prop::classical_and(a, b);
  Prop c2 = Prop::classical_and(b, a);
  CHECK(quote(c1) != quote(c2));
  CHECK(quote(c1).named() == c1);
}

TEST_CASE("assertions") {
  Prop p = Prop::atom("p0");

  SECTION("classical assertions have degree exactly 1") {
    Assertion a = Assertion::classical(p);
    CHECK(a.is_classical());
    CHECK(a.degree() == Complex(1.0, 0.0));
    CHECK(a.subject() == p);
  }
  SECTION("a graded assertion with degree 1 is classical") {
    Assertion a = Assertion::graded(Complex(1.0, 0.0), p);
    CHECK(a.is_classical());
    CHECK(a == Assertion::classical(p));
  }
  SECTION("graded degrees live in the closed unit disk") {
    Assertion a = Assertion::graded(Complex(0.0, 0.8), p);
    CHECK_FALSE(a.is_classical());
    CHECK(a.degree() == Complex(0.0, 0.8));
    CHECK_THROWS_AS(Assertion::graded(Complex(1.1, 0.0), p), DegreeOutOfRange);
    CHECK_THROWS_AS(Assertion::graded(Complex(0.8, 0.8), p), DegreeOutOfRange);
    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Assertion::graded(Complex(nan, 0.0), p), DegreeOutOfRange);
  }
  SECTION("the input tolerance admits boundary noise") {
    double r = std::sqrt(1.0 + 0.5e-6);
    CHECK_NOTHROW(Assertion::graded(Complex(r, 0.0), p));
    double s = std::sqrt(1.0 + 2e-6);
    CHECK_THROWS_AS(Assertion::graded(Complex(s, 0.0), p), DegreeOutOfRange);
  }
  SECTION("equality compares degree and subject") {
    CHECK(Assertion::graded(Complex(0.6, 0.0), p) ==
          Assertion::graded(Complex(0.6, 0.0), Prop::atom("p0")));
    CHECK(Assertion::graded(Complex(0.6, 0.0), p) !=
          Assertion::graded(Complex(0.0, 0.6), p));
    CHECK(Assertion::classical(p) != Assertion::graded(Complex(0.6, 0.0), p));
  }
}

TEST_CASE("squared modulus") {
  CHECK(squared_modulus(Complex(0.6, 0.0)) + squared_modulus(Complex(0.0, 0.8)) ==
        1.0);
  CHECK(squared_modulus(Complex(3.0, 4.0)) == 25.0);
  CHECK(is_finite(Complex(0.0, 0.0)));
  CHECK_FALSE(is_finite(Complex(std::numeric_limits<double>::infinity(), 0.0)));
}
