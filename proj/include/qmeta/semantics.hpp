#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmeta/ast.hpp"
#include "qmeta/meta_calculus.hpp"
#include "qmeta/print.hpp"

namespace qmeta {

/// A fuzzy (partial) truth value in [0, 1].
///
/// Degrees are accepted up to the input tolerance above unit modulus, so the
/// squared modulus is clamped back into range here; anything further out is a
/// logic error.
class TruthValue {
public:
  explicit TruthValue(double v) : value_(v) {
    if (!(v >= -kInputTolerance && v <= 1.0 + kInputTolerance))
      throw Error(ErrorKind::Semantic,
                  "truth value " + to_text(v) + " outside [0, 1]");
    value_ = std::clamp(v, 0.0, 1.0);
  }

  double value() const { return value_; }

  friend bool operator==(TruthValue a, TruthValue b) {
    return a.value_ == b.value_;
  }

private:
  double value_;
};

/// Ordered list of distinct atom names; the fixed index space for states.
class Basis {
public:
  explicit Basis(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
      throw Error(ErrorKind::Semantic, "basis must not be empty");
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      for (std::size_t j = i + 1; j < atoms_.size(); ++j)
        if (atoms_[i] == atoms_[j])
          throw DuplicateOperand("duplicate basis atom '" + atoms_[i] + "'");
  }

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const std::string& at(std::size_t i) const { return atoms_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.atoms_ == b.atoms_;
  }

private:
  std::vector<std::string> atoms_;
};

/// A normalized amplitude vector over a basis. Amplitudes keep their phases;
/// only truth-value computations discard them.
class QubitState {
public:
  QubitState(Basis basis, std::vector<Complex> amplitudes)
      : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != basis_.size())
      throw ArityError("state needs one amplitude per basis atom");
    for (Complex a : amplitudes_)
      if (!is_finite(a))
        throw Error(ErrorKind::Semantic, "amplitude must be finite");
    if (!check_metadata(amplitudes_))
      throw NormalizationViolation(
          "sum of squared amplitude moduli is " +
          to_text(degree_mass(amplitudes_)) + ", expected 1 within " +
          to_text(kInputTolerance));
  }

  const Basis& basis() const { return basis_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

private:
  Basis basis_;
  std::vector<Complex> amplitudes_;
};

/// Basis states: amplitude 1 at the atom's index, 0 elsewhere.
inline QubitState interpret_atom(const std::string& name, const Basis& basis) {
  auto index = basis.index_of(name);
  if (!index)
    throw UnknownAtom("atom '" + name + "' is not in the basis");
  std::vector<Complex> amplitudes(basis.size(), Complex(0.0, 0.0));
  amplitudes[*index] = Complex(1.0, 0.0);
  return QubitState(basis, std::move(amplitudes));
}

/// A superposition of basis atoms as an amplitude vector: degree i becomes
/// the amplitude at operand i's index. Operands must be distinct basis atoms.
inline QubitState interpret_superposition(const Prop& p, const Basis& basis) {
  if (p.kind() != Prop::Kind::Superposition)
    throw NotSuperposition("expected a superposition, got " + to_text(p));
  std::vector<Complex> amplitudes(basis.size(), Complex(0.0, 0.0));
  std::vector<bool> used(basis.size(), false);
  for (std::size_t i = 0; i < p.part_count(); ++i) {
    const Prop& operand = p.operands()[i];
    if (!operand.is_atom())
      throw InvalidFormula("superposition operand must be an atom, got " +
                           to_text(operand));
    auto index = basis.index_of(operand.atom_name());
    if (!index)
      throw UnknownAtom("atom '" + operand.atom_name() +
                        "' is not in the basis");
    if (used[*index])
      throw DuplicateOperand("atom '" + operand.atom_name() +
                             "' appears twice in the superposition");
    used[*index] = true;
    amplitudes[*index] = p.degrees()[i];
  }
  return QubitState(basis, std::move(amplitudes));
}

/// Truth value of an assertion: the squared modulus of its degree.
/// Classical assertions give exactly 1.
inline TruthValue truth_value(const Assertion& a) {
  if (a.is_classical()) return TruthValue(1.0);
  return TruthValue(squared_modulus(a.degree()));
}

/// Per-atom truth values |amplitude|^2; sums to 1 like the state.
inline std::vector<TruthValue> truth_profile(const QubitState& s) {
  std::vector<TruthValue> out;
  out.reserve(s.amplitudes().size());
  for (Complex a : s.amplitudes())
    out.push_back(TruthValue(squared_modulus(a)));
  return out;
}

/// One output row per basis atom: amplitude components and truth value.
struct StateRecord {
  std::string atom;
  double re;
  double im;
  double truth;
};

inline std::vector<StateRecord> state_records(const QubitState& s) {
  std::vector<StateRecord> out;
  out.reserve(s.basis().size());
  for (std::size_t i = 0; i < s.basis().size(); ++i) {
    Complex a = s.amplitudes()[i];
    out.push_back({s.basis().at(i), a.real(), a.imag(),
                   TruthValue(squared_modulus(a)).value()});
  }
  return out;
}

}  // namespace qmeta
