#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace mukai {

// Named, recomputed assertions attached to results and CLI reports.
struct Check {
  std::string name;
  bool pass = false;
};

struct Verification {
  std::vector<Check> checks;

  void add(std::string name, bool pass) { checks.push_back({std::move(name), pass}); }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.pass; });
  }
};

}  // namespace mukai
