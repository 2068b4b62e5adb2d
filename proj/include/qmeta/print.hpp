#pragma once

#include <charconv>
#include <cstdio>
#include <string>

#include "qmeta/ast.hpp"

namespace qmeta {

/// Shortest decimal form that parses back to the same double.
inline std::string to_text(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

/// Complex literal: "a", "bi", "a+bi" or "a-bi".
inline std::string to_text(Complex z) {
  if (z.imag() == 0.0) return to_text(z.real());
  if (z.real() == 0.0) return to_text(z.imag()) + "i";
  std::string out = to_text(z.real());
  if (z.imag() < 0.0) {
    out += "-";
    out += to_text(-z.imag());
  } else {
    out += "+";
    out += to_text(z.imag());
  }
  out += "i";
  return out;
}

/// Fixed 12-significant-digit rendering used by record output.
inline std::string to_text_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::string(buf);
}

namespace detail {

// Binding strength, loosest to tightest: -> (1, right), & (2, left),
// * (3, left), ~ (4), atoms / P(...) / superpositions (5).
inline int precedence(Prop::Kind k) {
  switch (k) {
    case Prop::Kind::LukaImplies:
      return 1;
    case Prop::Kind::ClassicalAnd:
      return 2;
    case Prop::Kind::LukaStrongAnd:
      return 3;
    case Prop::Kind::LukaNeg:
      return 4;
    default:
      return 5;
  }
}

void print_prop(std::string& out, const Prop& p);

inline void print_child(std::string& out, const Prop& child, int min_prec) {
  if (precedence(child.kind()) < min_prec) {
    out += "(";
    print_prop(out, child);
    out += ")";
  } else {
    print_prop(out, child);
  }
}

// Superposition operands print bare only when atomic.
inline void print_operand(std::string& out, const Prop& operand) {
  if (operand.is_atom()) {
    out += operand.atom_name();
  } else {
    out += "(";
    print_prop(out, operand);
    out += ")";
  }
}

inline void print_prop(std::string& out, const Prop& p) {
  switch (p.kind()) {
    case Prop::Kind::Atom:
      out += p.atom_name();
      break;
    case Prop::Kind::ClassicalAnd:
      print_child(out, p.left(), 2);
      out += " & ";
      print_child(out, p.right(), 3);
      break;
    case Prop::Kind::LukaStrongAnd:
      print_child(out, p.left(), 3);
      out += " * ";
      print_child(out, p.right(), 4);
      break;
    case Prop::Kind::LukaImplies:
      // right-associative
      print_child(out, p.left(), 2);
      out += " -> ";
      print_child(out, p.right(), 1);
      break;
    case Prop::Kind::LukaNeg:
      out += "~";
      print_child(out, p.inner(), 4);
      break;
    case Prop::Kind::Probably:
      out += "P(";
      print_prop(out, p.inner());
      out += ")";
      break;
    case Prop::Kind::Superposition: {
      print_operand(out, p.operands()[0]);
      out += " [";
      for (std::size_t i = 0; i < p.degrees().size(); ++i) {
        if (i > 0) out += ", ";
        out += to_text(p.degrees()[i]);
      }
      out += "]& ";
      for (std::size_t i = 1; i < p.operands().size(); ++i) {
        if (i > 1) out += ", ";
        print_operand(out, p.operands()[i]);
      }
      break;
    }
  }
}

}  // namespace detail

inline std::string to_text(const Prop& p) {
  std::string out;
  detail::print_prop(out, p);
  return out;
}

/// Quotation: atoms keep their bare name, compounds gain parentheses,
/// so quote(A & B) renders as '(A & B)'.
inline std::string to_text(const Name& n) {
  const Prop& p = n.named();
  if (p.is_atom()) return "'" + p.atom_name() + "'";
  return "'(" + to_text(p) + ")'";
}

/// "|- p" for classical assertions, "|-[degree] p" for graded ones.
inline std::string to_text(const Assertion& a) {
  if (a.is_classical()) return "|- " + to_text(a.subject());
  return "|-[" + to_text(a.degree()) + "] " + to_text(a.subject());
}

}  // namespace qmeta
