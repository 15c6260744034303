#pragma once

#include <string>
#include <vector>

#include "wordorder/poset.hpp"

namespace wordorder::selftest {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // what was covered, or the first counterexample
};

/// Every labeled poset over the given elements. Enumerates one orientation
/// per unordered pair (unrelated, forward, backward) and keeps the
/// transitively closed candidates. Intended for names.size() <= 5.
std::vector<Poset> all_posets_on(const std::vector<std::string>& names);

/// Independent validity check of a poset table: plain loops over the
/// public leq accessor, no shared machinery with construction.
bool table_is_poset(const Poset& p);

/// Runs the acceptance criteria and the module property suites.
/// `exhaustive_len` is the word-length bound of the exhaustive
/// oracle-equivalence windows (criteria that pin their own depth keep it).
std::vector<CheckResult> run_all(int exhaustive_len = 3);

}  // namespace wordorder::selftest
