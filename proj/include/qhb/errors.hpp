#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qhb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// Raised when an induced map fails to descend to a quotient.
class IllDefined : public Error {
 public:
  using Error::Error;
};

class NotABialgebra : public Error {
 public:
  using Error::Error;
};

class ModuleTooLarge : public Error {
 public:
  using Error::Error;
};

/// Verification of the algebra axioms failed; `failed` lists the check names.
class AxiomError : public Error {
 public:
  explicit AxiomError(std::vector<std::string> failed)
      : Error(join(failed)), failed_(std::move(failed)) {}
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  static std::string join(const std::vector<std::string>& names) {
    std::string s = "axiom check failed:";
    for (const auto& n : names) s += " " + n;
    return s;
  }
  std::vector<std::string> failed_;
};

/// The equivalent predicates of the main report disagree.
class InconsistentPredicates : public Error {
 public:
  using Error::Error;
};

}  // namespace qhb
