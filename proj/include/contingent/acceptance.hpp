#ifndef CONTINGENT_ACCEPTANCE_HPP
#define CONTINGENT_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace contingent {

// One verification criterion of the release gate. `pass` requires both the
// logical checks and the runtime budget to hold; budget_ms <= 0 means no
// budget.
struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double elapsed_ms = 0.0;
  double budget_ms = 0.0;
  std::string detail;
};

std::string criterion_line(const CriterionResult& result);

// Runs the full gate with all tolerances and seeds pinned. Progress lines go
// to `progress` when given (one line per criterion as it finishes).
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

}  // namespace contingent

#endif  // CONTINGENT_ACCEPTANCE_HPP
