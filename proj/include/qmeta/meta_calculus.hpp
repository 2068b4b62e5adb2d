#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmeta/ast.hpp"
#include "qmeta/print.hpp"

namespace qmeta {

/// Assertions joined by the metalinguistic "and". A pure list: the link
/// carries no degree algebra of its own.
class CompoundAssertion {
public:
  explicit CompoundAssertion(std::vector<Assertion> parts)
      : parts_(std::move(parts)) {
    if (parts_.empty())
      throw ArityError("compound assertion must have at least one part");
  }

  const std::vector<Assertion>& parts() const { return parts_; }

  friend bool operator==(const CompoundAssertion& a,
                         const CompoundAssertion& b) {
    return a.parts_ == b.parts_;
  }

private:
  std::vector<Assertion> parts_;
};

inline double degree_mass(const std::vector<Complex>& degrees) {
  double sum = 0.0;
  for (Complex d : degrees) sum += squared_modulus(d);
  return sum;
}

/// Meta-data constraint: the squared moduli of the degrees sum to 1.
inline bool check_metadata(const std::vector<Complex>& degrees,
                           double tolerance = kInputTolerance) {
  if (degrees.empty()) return false;
  return std::abs(degree_mass(degrees) - 1.0) <= tolerance;
}

/// From |- A and |- B, forms |- A & B. Both inputs must be classical.
inline Assertion compose_classical(const Assertion& a, const Assertion& b) {
  if (!a.is_classical())
    throw NotClassical("left assertion is graded: " + to_text(a));
  if (!b.is_classical())
    throw NotClassical("right assertion is graded: " + to_text(b));
  return Assertion::classical(Prop::classical_and(a.subject(), b.subject()));
}

/// From |- A & B, recovers |- A and |- B. Inverse of compose_classical.
inline std::pair<Assertion, Assertion> decompose_classical(const Assertion& c) {
  if (!c.is_classical())
    throw NotClassical("assertion is graded: " + to_text(c));
  if (c.subject().kind() != Prop::Kind::ClassicalAnd)
    throw NotConjunction("subject is not a conjunction: " +
                         to_text(c.subject()));
  return {Assertion::classical(c.subject().left()),
          Assertion::classical(c.subject().right())};
}

/// From |-[l0] p0 ... |-[ln] pn, forms the plain assertion of the
/// superposition p0 [l0, ..., ln]& ... pn. The degree list must satisfy the
/// meta-data constraint; violations are errors, never re-normalized.
inline Assertion compose_quantum(const std::vector<Assertion>& parts) {
  if (parts.size() < 2)
    throw ArityError("quantum composition requires at least 2 parts, got " +
                     std::to_string(parts.size()));
  std::vector<Complex> degrees;
  std::vector<Prop> subjects;
  degrees.reserve(parts.size());
  subjects.reserve(parts.size());
  for (const Assertion& part : parts) {
    degrees.push_back(part.degree());
    subjects.push_back(part.subject());
  }
  if (!check_metadata(degrees))
    throw NormalizationViolation(
        "sum of squared degree moduli is " + to_text(degree_mass(degrees)) +
        ", expected 1 within " + to_text(kInputTolerance));
  return Assertion::classical(
      Prop::superposition(std::move(degrees), std::move(subjects)));
}

/// From the asserted superposition, recovers one graded assertion per part.
/// Degrees are returned exactly as stored.
inline std::vector<Assertion> decompose_quantum(const Assertion& c) {
  if (c.subject().kind() != Prop::Kind::Superposition)
    throw NotSuperposition("subject is not a superposition: " +
                           to_text(c.subject()));
  std::vector<Assertion> out;
  const auto& degrees = c.subject().degrees();
  const auto& operands = c.subject().operands();
  out.reserve(operands.size());
  for (std::size_t i = 0; i < operands.size(); ++i)
    out.push_back(Assertion::graded(degrees[i], operands[i]));
  return out;
}

/// Canonical text of the classical definitional equation for A and B:
/// "|- A & B iff |- A and |- B".
inline std::string render_defeq_classical(const Prop& a, const Prop& b) {
  Assertion composed =
      compose_classical(Assertion::classical(a), Assertion::classical(b));
  return to_text(composed) + " iff " + to_text(Assertion::classical(a)) +
         " and " + to_text(Assertion::classical(b));
}

/// Canonical text of the quantum definitional equation for graded parts:
/// "|- p0 [l0, l1]& p1 iff |-[l0] p0 and |-[l1] p1".
inline std::string render_defeq_quantum(const std::vector<Assertion>& parts) {
  Assertion composed = compose_quantum(parts);
  std::string out = to_text(composed) + " iff ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " and ";
    out += to_text(parts[i]);
  }
  return out;
}

/// Walks a formula and rejects the first superposition whose degree list
/// fails the meta-data constraint. Degrees are never re-normalized.
inline void require_normalized(const Prop& p) {
  switch (p.kind()) {
    case Prop::Kind::Atom:
      return;
    case Prop::Kind::Superposition: {
      if (!check_metadata(p.degrees()))
        throw NormalizationViolation(
            "sum of squared degree moduli is " + to_text(degree_mass(p.degrees())) +
            ", expected 1 within " + to_text(kInputTolerance) + " in " +
            to_text(p));
      for (const Prop& part : p.operands()) require_normalized(part);
      return;
    }
    case Prop::Kind::Probably:
    case Prop::Kind::LukaNeg:
      require_normalized(p.inner());
      return;
    default:
      require_normalized(p.left());
      require_normalized(p.right());
      return;
  }
}

}  // namespace qmeta
