#include <iostream>

#include "wordorder/selftest.hpp"

int main() {
  const auto results = wordorder::selftest::run_all();
  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    all_passed = all_passed && r.passed;
  }
  std::cout << (all_passed ? "acceptance: all criteria passed\n" : "acceptance: FAILURES\n");
  return all_passed ? 0 : 1;
}
