#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmeta/error.hpp"

namespace qmeta {

using Complex = std::complex<double>;

/// Squared modulus |z|^2.
inline double squared_modulus(Complex z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Acceptance tolerance for human-entered degree lists: the sum of squared
/// moduli may deviate from 1 by up to this much and still be accepted.
inline constexpr double kInputTolerance = 1e-6;

/// Propagation tolerance for internally constructed states; checked by tests,
/// not enforced at construction.
inline constexpr double kInternalTolerance = 1e-9;

/// An immutable object-language proposition. Copying is cheap (shared node).
///
/// Formation rules enforced by the factories:
///   - a superposition has at least two parts and finite degrees;
///   - P wraps only Boolean base formulas (atoms and conjunctions of atoms);
///   - the many-valued connectives (~, *, ->) apply only to P-formulas or to
///     formulas already built from them.
class Prop {
public:
  enum class Kind {
    Atom,
    ClassicalAnd,
    Superposition,
    Probably,
    LukaNeg,
    LukaStrongAnd,
    LukaImplies,
  };

  struct AtomNode {
    std::string name;
  };
  struct ClassicalAndNode {
    std::vector<Prop> operands;  // exactly {left, right}
  };
  struct SuperpositionNode {
    std::vector<Complex> degrees;  // same length as operands
    std::vector<Prop> operands;
  };
  struct ProbablyNode {
    std::vector<Prop> inner;  // exactly one
  };
  struct LukaNegNode {
    std::vector<Prop> inner;  // exactly one
  };
  struct LukaStrongAndNode {
    std::vector<Prop> operands;  // exactly {left, right}
  };
  struct LukaImpliesNode {
    std::vector<Prop> operands;  // exactly {left, right}
  };

  using Node = std::variant<AtomNode, ClassicalAndNode, SuperpositionNode,
                            ProbablyNode, LukaNegNode, LukaStrongAndNode,
                            LukaImpliesNode>;

  static Prop atom(std::string name) {
    if (name.empty())
      throw InvalidFormula("atom name must not be empty");
    return Prop(AtomNode{std::move(name)});
  }

  static Prop classical_and(Prop left, Prop right) {
    return Prop(ClassicalAndNode{{std::move(left), std::move(right)}});
  }

  static Prop superposition(std::vector<Complex> degrees,
                            std::vector<Prop> operands) {
    if (degrees.size() != operands.size())
      throw ArityError("superposition needs one degree per operand, got " +
                       std::to_string(degrees.size()) + " degrees for " +
                       std::to_string(operands.size()) + " operands");
    if (operands.size() < 2)
      throw ArityError("superposition requires at least 2 parts, got " +
                       std::to_string(operands.size()));
    for (Complex d : degrees)
      if (!is_finite(d))
        throw InvalidFormula("superposition degree must be finite");
    return Prop(SuperpositionNode{std::move(degrees), std::move(operands)});
  }

  static Prop probably(Prop inner) {
    if (!inner.is_boolean_base())
      throw InvalidFormula(
          "P applies only to Boolean base formulas (atoms and conjunctions "
          "of atoms)");
    return Prop(ProbablyNode{{std::move(inner)}});
  }

  static Prop luka_neg(Prop inner) {
    require_luka_operand(inner, "~");
    return Prop(LukaNegNode{{std::move(inner)}});
  }

  static Prop luka_strong_and(Prop left, Prop right) {
    require_luka_operand(left, "*");
    require_luka_operand(right, "*");
    return Prop(LukaStrongAndNode{{std::move(left), std::move(right)}});
  }

  static Prop luka_implies(Prop left, Prop right) {
    require_luka_operand(left, "->");
    require_luka_operand(right, "->");
    return Prop(LukaImpliesNode{{std::move(left), std::move(right)}});
  }

  Kind kind() const { return static_cast<Kind>(node_->index()); }

  bool is_atom() const { return kind() == Kind::Atom; }

  const std::string& atom_name() const {
    return std::get<AtomNode>(*node_).name;
  }

  const Prop& left() const { return binary_operands()[0]; }
  const Prop& right() const { return binary_operands()[1]; }

  const Prop& inner() const {
    if (kind() == Kind::Probably) return std::get<ProbablyNode>(*node_).inner[0];
    return std::get<LukaNegNode>(*node_).inner[0];
  }

  const std::vector<Complex>& degrees() const {
    return std::get<SuperpositionNode>(*node_).degrees;
  }
  const std::vector<Prop>& operands() const {
    return std::get<SuperpositionNode>(*node_).operands;
  }
  std::size_t part_count() const { return operands().size(); }

  /// Atom, or a conjunction tree whose leaves are all atoms.
  bool is_boolean_base() const {
    if (is_atom()) return true;
    if (kind() == Kind::ClassicalAnd)
      return left().is_boolean_base() && right().is_boolean_base();
    return false;
  }

  /// A P-formula or a formula built from P-formulas with ~, * and ->.
  bool is_luka_formula() const {
    switch (kind()) {
      case Kind::Probably:
        return true;
      case Kind::LukaNeg:
        return inner().is_luka_formula();
      case Kind::LukaStrongAnd:
      case Kind::LukaImplies:
        return left().is_luka_formula() && right().is_luka_formula();
      default:
        return false;
    }
  }

  bool contains_superposition() const {
    switch (kind()) {
      case Kind::Atom:
        return false;
      case Kind::Superposition:
        return true;
      case Kind::Probably:
      case Kind::LukaNeg:
        return inner().contains_superposition();
      default:
        return left().contains_superposition() ||
               right().contains_superposition();
    }
  }

  /// Structural equality. Degrees compare componentwise exact.
  friend bool operator==(const Prop& a, const Prop& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Atom:
        return a.atom_name() == b.atom_name();
      case Kind::ClassicalAnd:
      case Kind::LukaStrongAnd:
      case Kind::LukaImplies:
        return a.left() == b.left() && a.right() == b.right();
      case Kind::Probably:
      case Kind::LukaNeg:
        return a.inner() == b.inner();
      case Kind::Superposition: {
        if (a.part_count() != b.part_count()) return false;
        for (std::size_t i = 0; i < a.part_count(); ++i)
          if (a.degrees()[i] != b.degrees()[i] ||
              !(a.operands()[i] == b.operands()[i]))
            return false;
        return true;
      }
    }
    return false;
  }

  friend bool operator!=(const Prop& a, const Prop& b) { return !(a == b); }

private:
  explicit Prop(Node node) : node_(std::make_shared<Node>(std::move(node))) {}

  const std::vector<Prop>& binary_operands() const {
    if (kind() == Kind::ClassicalAnd)
      return std::get<ClassicalAndNode>(*node_).operands;
    if (kind() == Kind::LukaStrongAnd)
      return std::get<LukaStrongAndNode>(*node_).operands;
    return std::get<LukaImpliesNode>(*node_).operands;
  }

  static void require_luka_operand(const Prop& p, const char* connective) {
    if (!p.is_luka_formula())
      throw InvalidFormula(std::string(connective) +
                           " applies only to P-formulas");
  }

  std::shared_ptr<const Node> node_;
};

/// The metalanguage name of a proposition (its quotation). Two names are
/// equal iff the named propositions are structurally equal.
class Name {
public:
  explicit Name(Prop named) : named_(std::move(named)) {}

  const Prop& named() const { return named_; }

  friend bool operator==(const Name& a, const Name& b) {
    return a.named_ == b.named_;
  }
  friend bool operator!=(const Name& a, const Name& b) { return !(a == b); }

private:
  Prop named_;
};

/// quote(p): the name of p.
inline Name quote(const Prop& p) { return Name(p); }

/// A metalanguage judgment: a proposition asserted with a complex assertion
/// degree. Degree exactly 1 is the classical (certain) case; a graded
/// assertion with degree 1 and a classical assertion are the same value.
class Assertion {
public:
  /// Classical assertion: degree exactly 1.
  static Assertion classical(Prop subject) {
    return Assertion(Complex(1.0, 0.0), std::move(subject));
  }

  /// Graded assertion. Requires |degree|^2 <= 1 + input tolerance.
  static Assertion graded(Complex degree, Prop subject) {
    if (!is_finite(degree))
      throw DegreeOutOfRange("assertion degree must be finite");
    double sq = squared_modulus(degree);
    if (sq > 1.0 + kInputTolerance)
      throw DegreeOutOfRange("assertion degree has squared modulus " +
                             std::to_string(sq) + " > 1");
    return Assertion(degree, std::move(subject));
  }

  Complex degree() const { return degree_; }
  const Prop& subject() const { return subject_; }

  /// True iff the degree is exactly 1: graded assertions with degree 1
  /// reduce to classical ones.
  bool is_classical() const { return degree_ == Complex(1.0, 0.0); }

  friend bool operator==(const Assertion& a, const Assertion& b) {
    return a.degree_ == b.degree_ && a.subject_ == b.subject_;
  }
  friend bool operator!=(const Assertion& a, const Assertion& b) {
    return !(a == b);
  }

private:
  Assertion(Complex degree, Prop subject)
      : degree_(degree), subject_(std::move(subject)) {}

  Complex degree_;
  Prop subject_;
};

}  // namespace qmeta
