#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qmeta/ast.hpp"
#include "qmeta/parse.hpp"

namespace qmeta {

/// One script line: a labeled assertion. Unlabeled lines get "s<ordinal>".
struct Statement {
  std::string label;
  Assertion assertion;
};

/// A parsed script: an ordered basis declaration followed by assertions
/// whose atoms are all declared. Format is line-oriented: '#' starts a
/// comment, the first significant line is "basis: p0 p1 ...", every other
/// line is "label: |- ..." or a bare assertion.
struct Script {
  std::vector<std::string> basis;
  std::vector<Statement> statements;
};

namespace detail {

/// Rebases a syntax error from line-local to file-level byte offsets.
inline SyntaxError at_file_offset(const SyntaxError& e, std::size_t base) {
  std::string message = e.what();
  if (std::size_t pos = message.rfind(" at byte "); pos != std::string::npos)
    message.erase(pos);
  return SyntaxError(base + e.offset(), e.expected(), message);
}

inline bool is_ident_text(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!is_ident_char(s[i])) return false;
  return true;
}

inline void collect_atoms(const Prop& p, std::vector<std::string>& out) {
  switch (p.kind()) {
    case Prop::Kind::Atom:
      out.push_back(p.atom_name());
      return;
    case Prop::Kind::Probably:
    case Prop::Kind::LukaNeg:
      collect_atoms(p.inner(), out);
      return;
    case Prop::Kind::Superposition:
      for (const Prop& part : p.operands()) collect_atoms(part, out);
      return;
    default:
      collect_atoms(p.left(), out);
      collect_atoms(p.right(), out);
      return;
  }
}

}  // namespace detail

/// Every atom name occurring in p, in reading order, duplicates kept.
inline std::vector<std::string> atom_names(const Prop& p) {
  std::vector<std::string> out;
  detail::collect_atoms(p, out);
  return out;
}

inline Script parse_script(std::string_view text) {
  Script script;
  std::unordered_set<std::string> declared;
  std::unordered_set<std::string> labels;
  bool saw_basis = false;
  std::size_t line_start = 0;
  std::size_t ordinal = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.remove_suffix(1);
    std::size_t indent = 0;
    while (indent < line.size() && (line[indent] == ' ' || line[indent] == '\t'))
      ++indent;
    line = line.substr(indent);
    const std::size_t content_at = line_start + indent;
    if (line.empty()) {
      if (line_end == text.size()) break;
      line_start = line_end + 1;
      continue;
    }
    if (!saw_basis) {
      if (!line.starts_with("basis:"))
        throw SyntaxError(content_at, {"'basis:'"},
                          "script must declare 'basis: atom ...' first");
      std::size_t at = 6;
      while (at < line.size()) {
        while (at < line.size() && (line[at] == ' ' || line[at] == '\t')) ++at;
        if (at >= line.size()) break;
        std::size_t end = at;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t')
          ++end;
        std::string_view name = line.substr(at, end - at);
        if (!detail::is_ident_text(name) || detail::is_reserved_word(name))
          throw SyntaxError(content_at + at, {"atom"},
                            "'" + std::string(name) +
                                "' is not a valid atom name");
        if (!declared.insert(std::string(name)).second)
          throw DuplicateOperand("basis atom '" + std::string(name) +
                                 "' declared twice");
        script.basis.emplace_back(name);
        at = end;
      }
      if (script.basis.empty())
        throw SyntaxError(content_at, {"atom"},
                          "basis declaration needs at least one atom");
      saw_basis = true;
    } else {
      std::string label;
      std::string_view body = line;
      std::size_t body_at = content_at;
      std::size_t colon = line.find(':');
      if (colon != std::string_view::npos &&
          (colon + 1 >= line.size() || line[colon + 1] != '=')) {
        std::string_view head = line.substr(0, colon);
        while (!head.empty() && (head.back() == ' ' || head.back() == '\t'))
          head.remove_suffix(1);
        if (detail::is_ident_text(head)) {
          label = std::string(head);
          body = line.substr(colon + 1);
          body_at = content_at + colon + 1;
        }
      }
      ++ordinal;
      if (label.empty()) label = "s" + std::to_string(ordinal);
      if (!labels.insert(label).second)
        throw DuplicateOperand("label '" + label + "' used twice");
      Assertion assertion = [&] {
        try {
          return parse_assertion(body);
        } catch (const SyntaxError& e) {
          throw detail::at_file_offset(e, body_at);
        }
      }();
      for (const std::string& atom : atom_names(assertion.subject()))
        if (!declared.count(atom))
          throw UnknownAtom("atom '" + atom +
                            "' is not declared in the basis");
      script.statements.push_back({std::move(label), std::move(assertion)});
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!saw_basis)
    throw SyntaxError(text.size(), {"'basis:'"},
                      "script must declare 'basis: atom ...' first");
  return script;
}

}  // namespace qmeta
