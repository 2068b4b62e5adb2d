#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qmeta/ast.hpp"
#include "qmeta/judgment.hpp"
#include "qmeta/meta_calculus.hpp"
#include "qmeta/parse.hpp"
#include "qmeta/print.hpp"

namespace qmeta {

/// One derivation step: a judgment in canonical text, the rule that licenses
/// it, and the 1-based numbers of the earlier lines it uses.
struct TraceLine {
  std::string judgment;
  std::string rule;
  std::vector<std::size_t> refs;

  friend bool operator==(const TraceLine& a, const TraceLine& b) {
    return a.judgment == b.judgment && a.rule == b.rule && a.refs == b.refs;
  }
};

class DerivationTrace {
public:
  explicit DerivationTrace(std::vector<TraceLine> lines)
      : lines_(std::move(lines)) {
    if (lines_.empty())
      throw ArityError("a derivation trace needs at least one line");
  }

  const std::vector<TraceLine>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }

  /// Judgment text of the last line.
  const std::string& conclusion() const { return lines_.back().judgment; }

  /// "n. <judgment>   [<rule>]" or "[<rule> from m,k]", one line per step.
  std::string rendered() const {
    std::string out;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const TraceLine& line = lines_[i];
      out += std::to_string(i + 1) + ". " + line.judgment + "   [" + line.rule;
      if (!line.refs.empty()) {
        out += " from ";
        for (std::size_t j = 0; j < line.refs.size(); ++j) {
          if (j > 0) out += ",";
          out += std::to_string(line.refs[j]);
        }
      }
      out += "]\n";
    }
    return out;
  }

private:
  std::vector<TraceLine> lines_;
};

struct VerifyResult {
  bool ok;
  std::size_t line;    // 1-based faulty line, 0 when ok
  std::string reason;  // empty when ok
};

namespace detail {

inline const TruthClaim* single_truth(const std::vector<MetaAtom>& v) {
  return v.size() == 1 ? std::get_if<TruthClaim>(&v[0]) : nullptr;
}
inline const AssertClaim* single_assert(const std::vector<MetaAtom>& v) {
  return v.size() == 1 ? std::get_if<AssertClaim>(&v[0]) : nullptr;
}
inline const BareClaim* single_bare(const std::vector<MetaAtom>& v) {
  return v.size() == 1 ? std::get_if<BareClaim>(&v[0]) : nullptr;
}
inline bool unit_degree(Complex d) { return d == Complex(1.0, 0.0); }

using CheckOutcome = std::optional<std::string>;  // reason, or nullopt if ok

/// "'p' true iff p" with p free of superpositions.
inline CheckOutcome check_conv_t(const Judgment& j) {
  if (j.kind != Judgment::Kind::Biconditional)
    return "conv-t must be a biconditional";
  const TruthClaim* t = single_truth(j.lhs);
  const BareClaim* b = single_bare(j.rhs);
  if (!t || !b) return "conv-t relates a single truth claim to a bare formula";
  if (!(t->named == b->prop)) return "conv-t sides name different formulas";
  if (t->named.contains_superposition())
    return "conv-t applies only to superposition-free formulas";
  return std::nullopt;
}

/// "'(A & B)' true iff 'A' true and 'B' true".
inline CheckOutcome check_t_schema(const Judgment& j) {
  if (j.kind != Judgment::Kind::Biconditional)
    return "t-schema must be a biconditional";
  const TruthClaim* whole = single_truth(j.lhs);
  if (!whole || whole->named.kind() != Prop::Kind::ClassicalAnd)
    return "t-schema needs a named conjunction on the left";
  if (j.rhs.size() != 2) return "t-schema needs two truth claims on the right";
  const auto* a = std::get_if<TruthClaim>(&j.rhs[0]);
  const auto* b = std::get_if<TruthClaim>(&j.rhs[1]);
  if (!a || !b) return "t-schema needs two truth claims on the right";
  if (!(a->named == whole->named.left() && b->named == whole->named.right()))
    return "t-schema conjuncts do not match the named conjunction";
  return std::nullopt;
}

/// From "'p' true iff p", concludes "|- 'p' iff p".
inline CheckOutcome check_assert_form(const Judgment& j, const Judgment& prem) {
  if (prem.kind != Judgment::Kind::Biconditional)
    return "assert-form premise must be a biconditional";
  const TruthClaim* pt = single_truth(prem.lhs);
  const BareClaim* pb = single_bare(prem.rhs);
  if (!pt || !pb) return "assert-form premise must be conv-t shaped";
  if (j.kind != Judgment::Kind::Biconditional)
    return "assert-form must be a biconditional";
  const AssertClaim* a = single_assert(j.lhs);
  const BareClaim* b = single_bare(j.rhs);
  if (!a || !b)
    return "assert-form relates a single assertion to a bare formula";
  if (!a->quoted || !unit_degree(a->degree))
    return "assert-form asserts a name with degree 1";
  if (!(a->subject == pt->named && b->prop == pb->prop))
    return "assert-form does not match its premise";
  return std::nullopt;
}

/// "|- 'p' iff p" with p free of superpositions.
inline CheckOutcome check_conv_t_assert(const Judgment& j) {
  if (j.kind != Judgment::Kind::Biconditional)
    return "conv-t-assert must be a biconditional";
  const AssertClaim* a = single_assert(j.lhs);
  const BareClaim* b = single_bare(j.rhs);
  if (!a || !b)
    return "conv-t-assert relates a single assertion to a bare formula";
  if (!a->quoted || !unit_degree(a->degree))
    return "conv-t-assert asserts a name with degree 1";
  if (!(a->subject == b->prop))
    return "conv-t-assert sides name different formulas";
  if (a->subject.contains_superposition())
    return "conv-t-assert applies only to superposition-free formulas";
  return std::nullopt;
}

/// From "|- '(A & B)' iff A & B", concludes
/// "|- '(A & B)' iff |- 'A' and |- 'B'".
inline CheckOutcome check_t_schema_assert(const Judgment& j,
                                          const Judgment& prem) {
  if (prem.kind != Judgment::Kind::Biconditional)
    return "t-schema-assert premise must be a biconditional";
  const AssertClaim* pa = single_assert(prem.lhs);
  const BareClaim* pb = single_bare(prem.rhs);
  if (!pa || !pb || !pa->quoted || !unit_degree(pa->degree) ||
      !(pb->prop == pa->subject))
    return "t-schema-assert premise must be conv-t-assert shaped";
  if (j.kind != Judgment::Kind::Biconditional)
    return "t-schema-assert must be a biconditional";
  const AssertClaim* whole = single_assert(j.lhs);
  if (!whole || !whole->quoted || !unit_degree(whole->degree))
    return "t-schema-assert asserts a name with degree 1 on the left";
  if (!(whole->subject == pa->subject))
    return "t-schema-assert left side differs from its premise";
  if (whole->subject.kind() != Prop::Kind::ClassicalAnd)
    return "t-schema-assert needs a named conjunction on the left";
  if (j.rhs.size() != 2)
    return "t-schema-assert needs two assertions on the right";
  const auto* a = std::get_if<AssertClaim>(&j.rhs[0]);
  const auto* b = std::get_if<AssertClaim>(&j.rhs[1]);
  if (!a || !b || !a->quoted || !b->quoted || !unit_degree(a->degree) ||
      !unit_degree(b->degree))
    return "t-schema-assert needs two quoted degree-1 assertions on the right";
  if (!(a->subject == whole->subject.left() &&
        b->subject == whole->subject.right()))
    return "t-schema-assert conjuncts do not match the named conjunction";
  return std::nullopt;
}

/// Drops the quotes of every assertion in the premise, both sides.
inline CheckOutcome check_unquote(const Judgment& j, const Judgment& prem) {
  if (j.kind != Judgment::Kind::Biconditional ||
      prem.kind != Judgment::Kind::Biconditional)
    return "unquote relates two biconditionals";
  if (j.lhs.size() != prem.lhs.size() || j.rhs.size() != prem.rhs.size())
    return "unquote must keep the claim lists aligned";
  auto matches = [](const MetaAtom& quoted, const MetaAtom& plain)
      -> CheckOutcome {
    const auto* q = std::get_if<AssertClaim>(&quoted);
    const auto* p = std::get_if<AssertClaim>(&plain);
    if (!q || !p) return "unquote applies only to assertions";
    if (!q->quoted) return "unquote premise claims must all be quoted";
    if (p->quoted) return "unquote conclusion claims must all be unquoted";
    if (q->degree != p->degree || !(q->subject == p->subject))
      return "unquote must preserve degrees and subjects";
    return std::nullopt;
  };
  for (std::size_t i = 0; i < j.lhs.size(); ++i)
    if (auto bad = matches(prem.lhs[i], j.lhs[i])) return bad;
  for (std::size_t i = 0; i < j.rhs.size(); ++i)
    if (auto bad = matches(prem.rhs[i], j.rhs[i])) return bad;
  return std::nullopt;
}

/// "|-[l] 'p' iff P(p)" with p an atom and |l|^2 <= 1.
inline CheckOutcome check_conv_pt(const Judgment& j) {
  if (j.kind != Judgment::Kind::Biconditional)
    return "conv-pt must be a biconditional";
  const AssertClaim* a = single_assert(j.lhs);
  const BareClaim* b = single_bare(j.rhs);
  if (!a || !b) return "conv-pt relates a single assertion to a bare formula";
  if (!a->quoted) return "conv-pt asserts a name";
  if (!a->subject.is_atom()) return "conv-pt applies to atoms";
  if (!is_finite(a->degree) ||
      squared_modulus(a->degree) > 1.0 + kInputTolerance)
    return "conv-pt degree has squared modulus above 1";
  if (b->prop.kind() != Prop::Kind::Probably ||
      !(b->prop.inner() == a->subject))
    return "conv-pt right side must be P of the asserted atom";
  return std::nullopt;
}

/// "p0 [l0, l1]& p1 := P(p0) & P(p1)": distinct atoms, normalized degrees,
/// right side the conjunction of P over the parts in order.
inline CheckOutcome check_superpos_def(const Judgment& j) {
  if (j.kind != Judgment::Kind::Definition)
    return "superpos-def must be a definition";
  const BareClaim* s = single_bare(j.lhs);
  const BareClaim* r = single_bare(j.rhs);
  if (!s || !r) return "superpos-def relates two bare formulas";
  if (s->prop.kind() != Prop::Kind::Superposition)
    return "superpos-def left side must be a superposition";
  std::unordered_set<std::string> seen;
  for (const Prop& part : s->prop.operands()) {
    if (!part.is_atom()) return "superpos-def parts must be atoms";
    if (!seen.insert(part.atom_name()).second)
      return "superpos-def parts must be distinct atoms";
  }
  if (!check_metadata(s->prop.degrees()))
    return "superpos-def degrees must have squared moduli summing to 1";
  Prop expected = Prop::probably(s->prop.operands()[0]);
  for (std::size_t i = 1; i < s->prop.part_count(); ++i)
    expected = Prop::classical_and(expected,
                                   Prop::probably(s->prop.operands()[i]));
  if (!(r->prop == expected))
    return "superpos-def right side must conjoin P over the parts in order";
  return std::nullopt;
}

/// Rewrites the subject of a quoted degree-1 assertion along a definition:
/// from S := R and "|- 'R' iff R", concludes "|- 'S' iff S".
inline CheckOutcome check_subst(const Judgment& j, const Judgment& def,
                                const Judgment& base) {
  if (def.kind != Judgment::Kind::Definition)
    return "subst first premise must be a definition";
  const BareClaim* s = single_bare(def.lhs);
  const BareClaim* r = single_bare(def.rhs);
  if (!s || !r) return "subst definition must relate two bare formulas";
  if (base.kind != Judgment::Kind::Biconditional)
    return "subst second premise must be a biconditional";
  const AssertClaim* ba = single_assert(base.lhs);
  const BareClaim* bb = single_bare(base.rhs);
  if (!ba || !bb || !ba->quoted || !unit_degree(ba->degree) ||
      !(ba->subject == bb->prop))
    return "subst second premise must be conv-t-assert shaped";
  if (!(ba->subject == r->prop))
    return "subst second premise must be about the definition's right side";
  if (j.kind != Judgment::Kind::Biconditional)
    return "subst must be a biconditional";
  const AssertClaim* a = single_assert(j.lhs);
  const BareClaim* b = single_bare(j.rhs);
  if (!a || !b || !a->quoted || !unit_degree(a->degree))
    return "subst concludes a quoted degree-1 assertion";
  if (!(a->subject == s->prop && b->prop == s->prop))
    return "subst conclusion must be about the definition's left side";
  return std::nullopt;
}

/// From "|- 'S' iff S" and one conv-pt line per part, spells the plain
/// assertion of a superposition out as its graded parts.
inline CheckOutcome check_pt_schema(const Judgment& j,
                                    const std::vector<const Judgment*>& prems) {
  if (prems.empty()) return "pt-schema needs premises";
  if (j.kind != Judgment::Kind::Biconditional)
    return "pt-schema must be a biconditional";
  const AssertClaim* whole = single_assert(j.lhs);
  if (!whole || whole->quoted || !unit_degree(whole->degree))
    return "pt-schema asserts the superposition plainly on the left";
  const Prop& s = whole->subject;
  if (s.kind() != Prop::Kind::Superposition)
    return "pt-schema left side must assert a superposition";
  const std::size_t n = s.part_count();
  if (prems.size() != 1 + n)
    return "pt-schema needs the quoted line plus one conv-pt line per part";
  const Judgment& quoted = *prems[0];
  if (quoted.kind != Judgment::Kind::Biconditional)
    return "pt-schema first premise must be a biconditional";
  const AssertClaim* qa = single_assert(quoted.lhs);
  const BareClaim* qb = single_bare(quoted.rhs);
  if (!qa || !qb || !qa->quoted || !unit_degree(qa->degree) ||
      !(qa->subject == s) || !(qb->prop == s))
    return "pt-schema first premise must assert the same superposition quoted";
  if (j.rhs.size() != n)
    return "pt-schema needs one graded assertion per part on the right";
  for (std::size_t i = 0; i < n; ++i) {
    const auto* part = std::get_if<AssertClaim>(&j.rhs[i]);
    if (!part || part->quoted)
      return "pt-schema right side must be plain graded assertions";
    if (part->degree != s.degrees()[i] ||
        !(part->subject == s.operands()[i]))
      return "pt-schema part " + std::to_string(i + 1) +
             " does not match the superposition";
    const Judgment& cp = *prems[1 + i];
    const AssertClaim* ca =
        cp.kind == Judgment::Kind::Biconditional ? single_assert(cp.lhs)
                                                 : nullptr;
    if (!ca || !ca->quoted || ca->degree != s.degrees()[i] ||
        !(ca->subject == s.operands()[i]))
      return "pt-schema premise " + std::to_string(i + 2) +
             " is not the conv-pt line for part " + std::to_string(i + 1);
  }
  return std::nullopt;
}

/// Fixed premise count per rule; -1 means the checker validates it itself.
inline int rule_ref_count(const std::string& rule) {
  if (rule == "conv-t" || rule == "t-schema" || rule == "conv-t-assert" ||
      rule == "conv-pt" || rule == "superpos-def")
    return 0;
  if (rule == "assert-form" || rule == "t-schema-assert" || rule == "unquote")
    return 1;
  if (rule == "subst") return 2;
  if (rule == "pt-schema") return -1;
  return -2;  // unknown rule
}

}  // namespace detail

/// Re-checks every line of a trace against its rule and premises. Each
/// judgment is parsed back from its text, so a trace stands or falls on what
/// it literally says.
inline VerifyResult verify(const std::vector<TraceLine>& lines) {
  std::vector<Judgment> parsed;
  parsed.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const TraceLine& line = lines[i];
    const std::size_t here = i + 1;
    try {
      parsed.push_back(parse_judgment(line.judgment));
    } catch (const Error& e) {
      return {false, here, std::string("judgment does not parse: ") + e.what()};
    }
    const int want = detail::rule_ref_count(line.rule);
    if (want == -2) return {false, here, "unknown rule '" + line.rule + "'"};
    if (want >= 0 && line.refs.size() != static_cast<std::size_t>(want))
      return {false, here,
              "rule '" + line.rule + "' takes " + std::to_string(want) +
                  " premise(s), got " + std::to_string(line.refs.size())};
    std::vector<const Judgment*> prems;
    for (std::size_t r : line.refs) {
      if (r < 1 || r > i)
        return {false, here,
                "premise " + std::to_string(r) +
                    " is not an earlier line of the trace"};
      prems.push_back(&parsed[r - 1]);
    }
    const Judgment& j = parsed.back();
    detail::CheckOutcome bad;
    if (line.rule == "conv-t") bad = detail::check_conv_t(j);
    else if (line.rule == "t-schema") bad = detail::check_t_schema(j);
    else if (line.rule == "assert-form")
      bad = detail::check_assert_form(j, *prems[0]);
    else if (line.rule == "conv-t-assert")
      bad = detail::check_conv_t_assert(j);
    else if (line.rule == "t-schema-assert")
      bad = detail::check_t_schema_assert(j, *prems[0]);
    else if (line.rule == "unquote") bad = detail::check_unquote(j, *prems[0]);
    else if (line.rule == "conv-pt") bad = detail::check_conv_pt(j);
    else if (line.rule == "superpos-def")
      bad = detail::check_superpos_def(j);
    else if (line.rule == "subst")
      bad = detail::check_subst(j, *prems[0], *prems[1]);
    else bad = detail::check_pt_schema(j, prems);
    if (bad) return {false, here, *bad};
  }
  return {true, 0, ""};
}

inline VerifyResult verify(const DerivationTrace& trace) {
  return verify(trace.lines());
}

namespace detail {

inline void require_atom_name(const std::string& name) {
  bool ok = !name.empty() && is_ident_start(name[0]);
  for (std::size_t i = 1; ok && i < name.size(); ++i)
    ok = is_ident_char(name[i]);
  if (!ok || is_reserved_word(name))
    throw InvalidFormula("'" + name + "' is not a valid atom name");
}

inline MetaAtom truth_of(const Prop& p) { return TruthClaim{p}; }
inline MetaAtom assert_of(Complex degree, bool quoted, const Prop& p) {
  return AssertClaim{degree, quoted, p};
}
inline MetaAtom bare(const Prop& p) { return BareClaim{p}; }

inline TraceLine step(Judgment j, std::string rule,
                      std::vector<std::size_t> refs = {}) {
  return TraceLine{to_text(j), std::move(rule), std::move(refs)};
}

inline Judgment iff(std::vector<MetaAtom> lhs, std::vector<MetaAtom> rhs) {
  return Judgment{Judgment::Kind::Biconditional, std::move(lhs),
                  std::move(rhs)};
}

inline Judgment defn(const Prop& lhs, const Prop& rhs) {
  return Judgment{Judgment::Kind::Definition, {BareClaim{lhs}},
                  {BareClaim{rhs}}};
}

}  // namespace detail

/// Derives the classical definitional equation for two atoms: from the
/// truth conventions for a and b down to "|- a & b iff |- a and |- b".
inline DerivationTrace derive_classical_defeq(const std::string& name_a,
                                              const std::string& name_b) {
  using namespace detail;
  require_atom_name(name_a);
  require_atom_name(name_b);
  const Complex one(1.0, 0.0);
  Prop a = Prop::atom(name_a);
  Prop b = Prop::atom(name_b);
  Prop conj = Prop::classical_and(a, b);
  std::vector<TraceLine> lines;
  lines.push_back(step(iff({truth_of(a)}, {bare(a)}), "conv-t"));
  lines.push_back(step(iff({truth_of(b)}, {bare(b)}), "conv-t"));
  lines.push_back(
      step(iff({truth_of(conj)}, {truth_of(a), truth_of(b)}), "t-schema"));
  lines.push_back(step(iff({assert_of(one, true, a)}, {bare(a)}),
                       "assert-form", {1}));
  lines.push_back(step(iff({assert_of(one, true, b)}, {bare(b)}),
                       "assert-form", {2}));
  lines.push_back(
      step(iff({assert_of(one, true, conj)}, {bare(conj)}), "conv-t-assert"));
  lines.push_back(step(iff({assert_of(one, true, conj)},
                           {assert_of(one, true, a), assert_of(one, true, b)}),
                       "t-schema-assert", {6}));
  lines.push_back(
      step(iff({assert_of(one, false, conj)},
               {assert_of(one, false, a), assert_of(one, false, b)}),
           "unquote", {7}));
  return DerivationTrace(std::move(lines));
}

/// Derives the quantum definitional equation for a two-part superposition
/// over the atoms p0 and p1. Requires |l0|^2 + |l1|^2 = 1 within the input
/// tolerance.
inline DerivationTrace derive_quantum_defeq(Complex l0, Complex l1) {
  using namespace detail;
  if (!is_finite(l0) || !is_finite(l1))
    throw DegreeOutOfRange("derivation degrees must be finite");
  const std::vector<Complex> degrees{l0, l1};
  if (!check_metadata(degrees))
    throw NormalizationViolation(
        "sum of squared degree moduli is " + to_text(degree_mass(degrees)) +
        ", expected 1 within " + to_text(kInputTolerance));
  const Complex one(1.0, 0.0);
  Prop p0 = Prop::atom("p0");
  Prop p1 = Prop::atom("p1");
  Prop s = Prop::superposition(degrees, {p0, p1});
  Prop r = Prop::classical_and(Prop::probably(p0), Prop::probably(p1));
  std::vector<TraceLine> lines;
  lines.push_back(step(
      iff({assert_of(l0, true, p0)}, {bare(Prop::probably(p0))}), "conv-pt"));
  lines.push_back(step(
      iff({assert_of(l1, true, p1)}, {bare(Prop::probably(p1))}), "conv-pt"));
  lines.push_back(step(defn(s, r), "superpos-def"));
  lines.push_back(
      step(iff({assert_of(one, true, r)}, {bare(r)}), "conv-t-assert"));
  lines.push_back(
      step(iff({assert_of(one, true, s)}, {bare(s)}), "subst", {3, 4}));
  lines.push_back(step(iff({assert_of(one, false, s)},
                           {assert_of(l0, false, p0),
                            assert_of(l1, false, p1)}),
                       "pt-schema", {5, 1, 2}));
  return DerivationTrace(std::move(lines));
}

}  // namespace qmeta
