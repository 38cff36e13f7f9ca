// Release gate: one pass/fail line per criterion; nonzero exit on any
// failure. The same gate backs `contingent fixtures run-all`.

#include <iostream>

#include "contingent/acceptance.hpp"

int main() {
  const auto results = contingent::run_acceptance(&std::cout);
  bool all = true;
  for (const auto& result : results) all = all && result.pass;
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES") << std::endl;
  return all ? 0 : 1;
}
