#include "braceforge/errors.hpp"

#include <sstream>

#include "braceforge/budget.hpp"

namespace braceforge {

std::string Violation::message() const {
  std::ostringstream out;
  out << kind;
  if (!witness.empty()) {
    out << '(';
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out << ',';
      out << witness[i];
    }
    out << ')';
  }
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

AxiomError::AxiomError(Violation v)
    : std::runtime_error(v.message()), violation_(std::move(v)) {}

BudgetExceeded::BudgetExceeded(const std::string& what, std::uint64_t partial)
    : std::runtime_error("SearchBudgetExceeded: " + what + " (partial count " +
                         std::to_string(partial) + ")"),
      partial_(partial) {}

void fail(std::string kind, std::vector<int> witness, std::string detail) {
  throw AxiomError(Violation{std::move(kind), std::move(witness), std::move(detail)});
}

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("BRACEFORGE_BUDGET")) {
    try {
      b.max_candidates = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("BRACEFORGE_BUDGET is not an integer: ") + env);
    }
  }
  return b;
}

void Budget::check(std::uint64_t count, const std::string& what) const {
  if (count > max_candidates) throw BudgetExceeded(what, count);
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr std::uint64_t kMax = UINT64_MAX;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

}  // namespace braceforge
