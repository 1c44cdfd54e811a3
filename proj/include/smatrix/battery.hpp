#pragma once

// Verification battery: every quadratic form on a small roster of groups, each
// run through the S-matrix checks, plus a handful of fixed global checks.

#include <optional>
#include <string>
#include <vector>

#include "smatrix/abelian_group.hpp"
#include "smatrix/cocycle.hpp"
#include "smatrix/io.hpp"

namespace smatrix {

inline constexpr std::size_t kEnumerateMaxGroupOrder = 16;

/// Every valid q: G -> mu_{2 exp(G)}, from all generator values and cross
/// pairings, deduplicated in enumeration order.  Throws GroupTooLarge past 16.
std::vector<QuadraticForm> enumerate_quadratic_forms(const AbelianGroup& g);

struct BatteryCase {
  std::string name;
  QuadraticForm form;
  std::optional<bool> symmetric;
  std::optional<bool> nondegenerate;
};

/// All forms on Z2, Z3, Z4 and Z2xZ2.
std::vector<BatteryCase> default_roster();

struct CheckRecord {
  std::string case_name;
  std::string check;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct BatterySummary {
  std::vector<CheckRecord> records;
  std::vector<std::string> warnings;

  bool passed() const;
  /// [{case, check, pass, witness?}]
  Json to_json() const;
};

/// Per-case checks only; an empty roster passes with a warning.
BatterySummary run_battery(const std::vector<BatteryCase>& roster);

/// default_roster() plus the fixed checks (doubles, braiding existence,
/// classification, symmetric case, arithmetic kernel).
BatterySummary run_all();

}  // namespace smatrix
