#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace extlevel {

struct CheckOutcome {
  bool pass = true;
  std::size_t identities = 0;
  std::optional<std::string> diff;  // first failing identity and entry
};

/// A named group of exact identities over Z[xi, zeta, zeta1] (or random
/// instances over Z/9 for universal group identities).
struct CheckCase {
  std::string id;
  std::string group;
  std::string anchor;  // the displayed identity being certified
  std::function<CheckOutcome()> run;
};

struct CheckReport {
  std::string id;
  std::string anchor;
  bool pass = false;
  double ms = 0;
  std::size_t identities = 0;
  std::optional<std::string> diff;
};

struct SuiteReport {
  std::vector<CheckReport> reports;
  bool all_pass() const;
  std::size_t passed() const;
};

/// Registered cases in stable id order.
const std::vector<CheckCase>& check_registry();

/// Throws std::out_of_range for an unknown id.
CheckReport run_check(const std::string& id);

/// Cases whose id or group equals the filter (all when empty), evaluated on
/// up to `jobs` threads; reports come back in registry order.
SuiteReport run_all(const std::string& filter = "", int jobs = 1);

}  // namespace extlevel
