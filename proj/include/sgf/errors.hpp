#ifndef SGF_ERRORS_HPP
#define SGF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "sgf/report.hpp"

namespace sgf {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on an argument was violated.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Two partial permutations live on chains of different sizes.
class ChainSizeMismatch : public Error {
 public:
  using Error::Error;
};

// Point sets of different cardinality where a bijection was required.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A product of two listed elements is not itself in the element list.
class ClosureViolation : public Error {
 public:
  ClosureViolation(const std::string& what, std::string lhs, std::string rhs)
      : Error(what), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  const std::string& lhs() const { return lhs_; }
  const std::string& rhs() const { return rhs_; }

 private:
  std::string lhs_, rhs_;
};

// No identity element, or the multiplication is not associative.
class NotAMonoid : public Error {
 public:
  using Error::Error;
};

// An action pair failed one of its axiom checks; the failing report is kept.
class InvalidAction : public Error {
 public:
  explicit InvalidAction(VerificationReport report)
      : Error("action axiom failed: " + report.law), report_(std::move(report)) {}

  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

}  // namespace sgf

#endif  // SGF_ERRORS_HPP
