#pragma once

#include <functional>
#include <string>
#include <vector>

#include "collapse_lab/criteria.hpp"

namespace clab {

struct Claim {
  std::string id;
  bool pass = false;
  std::string expected;
  std::string observed;
};

struct PresetReport {
  std::string name;
  std::vector<Claim> claims;
  bool pass() const;
};

// Names in documentation order.
const std::vector<std::string>& preset_names();
// Rebuilds the published matrices or permutations and checks every stated claim.
// Throws InvalidArgument for an unknown name.
PresetReport run_preset(const std::string& name, const SearchBounds& b = {});

// Small explicit rows of the kthulhu/cthulhu tables, re-derived.
struct TableRow {
  std::string id;        // stable key, matches the bundled fixture
  std::string group;     // "SL3(2)"
  std::string cls;       // class description
  std::string expected;  // "TypeC", "TypeD", "kthulhu", ...
  std::string observed;
  bool match = false;
};
std::vector<TableRow> count_vs_verdict_tables(const SearchBounds& b = {});

}  // namespace clab
