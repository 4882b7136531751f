#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace autocomm {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication table failed validation. `kind()` says which law broke
/// and `indices()` names the offending element indices.
class ValidationError : public Error {
 public:
  enum class Kind { NotClosed, NotAssociative, NoIdentity, NoInverse };

  ValidationError(Kind kind, std::vector<int> indices, const std::string& msg)
      : Error(msg), kind_(kind), indices_(std::move(indices)) {}

  Kind kind() const { return kind_; }
  const std::vector<int>& indices() const { return indices_; }

 private:
  Kind kind_;
  std::vector<int> indices_;
};

class NotNormalError : public Error {
 public:
  NotNormalError(int conjugator, int member, const std::string& msg)
      : Error(msg), conjugator_(conjugator), member_(member) {}

  int conjugator() const { return conjugator_; }
  int member() const { return member_; }

 private:
  int conjugator_;
  int member_;
};

class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

/// Raised when a backtracking search exhausts its node budget or an input
/// exceeds the configured size cap for that search.
class SearchBudgetError : public Error {
 public:
  using Error::Error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class FileFormatError : public Error {
 public:
  using Error::Error;
};

class ClosureCapError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug in this library,
/// never bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace autocomm
