#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qmeta/ast.hpp"
#include "qmeta/judgment.hpp"
#include "qmeta/meta_calculus.hpp"
#include "qmeta/print.hpp"
#include "qmeta/semantics.hpp"

namespace qmeta {

/// A finite set of atoms of which an ordered subset carries a probability
/// distribution: each probabilized atom maps to p in [0,1] and the
/// probabilities sum to 1 within the propagation tolerance.
class ProbabilityContext {
public:
  ProbabilityContext(std::vector<std::string> atoms,
                     std::vector<std::pair<std::string, double>> probabilities)
      : atoms_(std::move(atoms)) {
    std::unordered_set<std::string> declared;
    for (const std::string& a : atoms_)
      if (!declared.insert(a).second)
        throw DuplicateOperand("atom '" + a + "' declared twice");
    double sum = 0.0;
    std::unordered_set<std::string> assigned;
    for (auto& [name, p] : probabilities) {
      if (!declared.count(name))
        throw UnknownAtom("'" + name + "' is not a declared atom");
      if (!assigned.insert(name).second)
        throw DuplicateOperand("atom '" + name + "' probabilized twice");
      if (!std::isfinite(p) || p < 0.0 || p > 1.0)
        throw DegreeOutOfRange("probability of '" + name + "' is " +
                               to_text(p) + ", must lie in [0,1]");
      probabilized_.push_back(name);
      values_.push_back(p);
      sum += p;
    }
    if (std::abs(sum - 1.0) > kInternalTolerance)
      throw NormalizationViolation("probabilities sum to " + to_text(sum) +
                                   ", expected 1 within " +
                                   to_text(kInternalTolerance));
  }

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<std::string>& probabilized() const { return probabilized_; }

  bool contains(const std::string& name) const {
    for (const std::string& a : atoms_)
      if (a == name) return true;
    return false;
  }

  bool is_probabilized(const std::string& name) const {
    return find(name).has_value();
  }

  /// Probability of a probabilized atom, exactly as given.
  double probability(const std::string& name) const {
    if (auto i = find(name)) return values_[*i];
    require_known(name);
    throw NotProbabilized("atom '" + name +
                          "' carries no probability in this context");
  }

private:
  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < probabilized_.size(); ++i)
      if (probabilized_[i] == name) return i;
    return std::nullopt;
  }

  void require_known(const std::string& name) const {
    if (!contains(name))
      throw UnknownAtom("'" + name + "' is not a declared atom");
  }

  std::vector<std::string> atoms_;
  std::vector<std::string> probabilized_;
  std::vector<double> values_;
};

/// Convention T: "'p' is true iff p", as the pair (name, proposition).
/// The proposition must be superposition-free; names of qubit states fall
/// under the probabilistic convention instead.
inline std::pair<Name, Prop> convention_t(const Prop& p) {
  if (p.contains_superposition())
    throw NotClassical("convention T applies only to superposition-free "
                       "formulas, got " + to_text(p));
  return {quote(p), p};
}

/// Expands the name of a conjunction into the truth claims of its conjuncts,
/// carried as the pair of classical assertions.
inline CompoundAssertion t_schema_expand(const Name& n) {
  const Prop& named = n.named();
  if (named.kind() != Prop::Kind::ClassicalAnd)
    throw NotConjunction("named formula is not a conjunction: " + to_text(n));
  return CompoundAssertion({Assertion::classical(named.left()),
                            Assertion::classical(named.right())});
}

/// Truth-claim text for an expanded conjunction name: "'A' true and 'B' true".
inline std::string render_t_schema(const Name& n) {
  CompoundAssertion parts = t_schema_expand(n);
  std::string out;
  for (std::size_t i = 0; i < parts.parts().size(); ++i) {
    if (i > 0) out += " and ";
    out += to_text(MetaAtom(TruthClaim{parts.parts()[i].subject()}));
  }
  return out;
}

/// The fuzzy modality: P(atom) with truth value v(P(atom)) = p(atom).
inline std::pair<Prop, TruthValue> probably(const ProbabilityContext& ctx,
                                            const std::string& atom) {
  double p = ctx.probability(atom);
  return {Prop::probably(Prop::atom(atom)), TruthValue(p)};
}

/// Convention PT: "'p' is probably true iff P(p)", asserted with degree
/// lambda = sqrt(p) * e^(i*phase), so |lambda|^2 = p. Phase defaults to the
/// principal nonnegative real root.
inline Assertion convention_pt(const ProbabilityContext& ctx,
                               const std::string& atom, double phase = 0.0) {
  if (!std::isfinite(phase))
    throw DegreeOutOfRange("phase must be finite");
  double p = ctx.probability(atom);
  double r = std::sqrt(p);
  Complex degree(r * std::cos(phase), r * std::sin(phase));
  return Assertion::graded(degree, Prop::atom(atom));
}

/// Assigns truth values to P-formulas. Later assignments to the same formula
/// overwrite earlier ones; lookup is by structural equality.
class LukaValuation {
public:
  void set(const Prop& p_formula, TruthValue v) {
    if (p_formula.kind() != Prop::Kind::Probably)
      throw InvalidFormula("a valuation assigns truth values to P-formulas, "
                           "got " + to_text(p_formula));
    for (auto& [key, value] : entries_) {
      if (key == p_formula) {
        value = v.value();
        return;
      }
    }
    entries_.emplace_back(p_formula, v.value());
  }

  std::optional<double> lookup(const Prop& p) const {
    for (const auto& [key, value] : entries_)
      if (key == p) return value;
    return std::nullopt;
  }

  const std::vector<std::pair<Prop, double>>& entries() const {
    return entries_;
  }

private:
  std::vector<std::pair<Prop, double>> entries_;
};

namespace detail {

inline double luka_eval_raw(const Prop& p, const LukaValuation& valuation) {
  switch (p.kind()) {
    case Prop::Kind::Probably: {
      if (auto v = valuation.lookup(p)) return *v;
      throw UnvaluedAtom("no truth value assigned to " + to_text(p));
    }
    case Prop::Kind::LukaNeg:
      return 1.0 - luka_eval_raw(p.inner(), valuation);
    case Prop::Kind::LukaStrongAnd:
      return std::max(0.0, luka_eval_raw(p.left(), valuation) +
                               luka_eval_raw(p.right(), valuation) - 1.0);
    case Prop::Kind::LukaImplies:
      return std::min(1.0, 1.0 - luka_eval_raw(p.left(), valuation) +
                               luka_eval_raw(p.right(), valuation));
    default:
      throw InvalidFormula("not a many-valued formula: " + to_text(p));
  }
}

}  // namespace detail

/// Łukasiewicz evaluation: ~x = 1-x, x*y = max(0, x+y-1),
/// x->y = min(1, 1-x+y), over P-formulas valued by the valuation.
inline TruthValue luka_eval(const Prop& p, const LukaValuation& valuation) {
  if (!p.is_luka_formula())
    throw InvalidFormula("not a many-valued formula: " + to_text(p));
  return TruthValue(detail::luka_eval_raw(p, valuation));
}

/// What a sound mathematician may claim about the Gödel sentence G_F of a
/// formal system F: a graded assertion, its fuzzy truth value, and through
/// the identification of G_F with the consistency statement Con_F, the
/// probability that F is consistent.
struct GoedelReport {
  Assertion assertion;                 // |-[lambda] G_F
  TruthValue truth_value;              // v(P(G_F)) = |lambda|^2
  std::string identification;          // G_F stands for Con_F
  TruthValue consistency_probability;  // p(Con_F), equal to the truth value
  std::string verdict;
};

inline GoedelReport goedel_report(Complex degree) {
  Assertion assertion = Assertion::graded(degree, Prop::atom("G_F"));
  TruthValue v(squared_modulus(degree));
  const char* verdict = v.value() == 1.0   ? "classically certain"
                        : v.value() == 0.0 ? "inconsistent"
                                           : "probabilistically incomplete";
  return {std::move(assertion), v, "G_F = Con_F", v, verdict};
}

}  // namespace qmeta
