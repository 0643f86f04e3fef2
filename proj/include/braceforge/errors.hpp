#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braceforge {

/// A failed axiom or law together with the elements that witness the failure.
struct Violation {
  std::string kind;
  std::vector<int> witness;
  std::string detail;

  std::string message() const;
};

/// Thrown when a mathematical check fails. Maps to CLI exit code 2.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(Violation v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Thrown when a search space exceeds the configured budget. Exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t partial);
  std::uint64_t partial_count() const { return partial_; }

 private:
  std::uint64_t partial_;
};

/// Malformed or out-of-contract input (schema, shapes, bounds). Exit code 4.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(std::string kind, std::vector<int> witness = {},
                       std::string detail = {});

}  // namespace braceforge
