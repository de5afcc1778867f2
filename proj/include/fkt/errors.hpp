#pragma once

#include <stdexcept>
#include <string>

namespace fkt {

// Malformed textual input (Gauss codes, files).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated domain.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant of a parsed object does not hold.
// `clause` names the violated requirement.
class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string& clause, const std::string& detail)
      : std::runtime_error(clause + ": " + detail), clause_(clause) {}
  const std::string& clause() const { return clause_; }

private:
  std::string clause_;
};

// An internal rule produced an impossible result (e.g. surgery lowered the
// Euler characteristic).  Never silently swallowed.
class InternalDefectError : public std::runtime_error {
public:
  explicit InternalDefectError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fkt
