#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmeta {

/// Error category, used by the CLI to pick an exit code:
/// syntax errors exit 1, semantic violations exit 2.
enum class ErrorKind {
  Syntax,
  Semantic,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Malformed input text. Carries the byte offset of the offending token and
/// the set of tokens that would have been accepted there.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& message)
      : Error(ErrorKind::Syntax,
              message + " at byte " + std::to_string(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct DegreeOutOfRange : Error {
  explicit DegreeOutOfRange(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct NotClassical : Error {
  explicit NotClassical(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct NotConjunction : Error {
  explicit NotConjunction(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct NotSuperposition : Error {
  explicit NotSuperposition(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct NormalizationViolation : Error {
  explicit NormalizationViolation(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct ArityError : Error {
  explicit ArityError(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct UnknownAtom : Error {
  explicit UnknownAtom(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct DuplicateOperand : Error {
  explicit DuplicateOperand(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct NotProbabilized : Error {
  explicit NotProbabilized(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

struct UnvaluedAtom : Error {
  explicit UnvaluedAtom(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

/// A well-formed parse tree that violates a formation rule of the language
/// (e.g. P applied to a non-Boolean formula).
struct InvalidFormula : Error {
  explicit InvalidFormula(const std::string& message)
      : Error(ErrorKind::Semantic, message) {}
};

}  // namespace qmeta
