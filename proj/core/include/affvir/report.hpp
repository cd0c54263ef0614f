#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace affvir {

/// One failed check: an identifier, the inputs that produced it, and the two
/// sides that disagreed.
struct CheckFailure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string got;
  std::string note;
};

/// Outcome of an exhaustive verification sweep. Failures are kept in the
/// deterministic order the sweep visits its work items.
struct CheckReport {
  std::size_t checked = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
  const CheckFailure* first_failure() const { return failures.empty() ? nullptr : &failures.front(); }
  void merge(const CheckReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace affvir
