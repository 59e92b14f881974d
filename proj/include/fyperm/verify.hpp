#pragma once

// Self-verification suites exposed through `fyperm verify`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fyperm {

struct SuiteReport {
  std::string suite;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> lines;  // one per check, "ok ..." or "FAIL ..."
  std::string summary;
  bool ok() const { return total > 0 && passed == total; }
};

/// Suite names in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite; n_max overrides the suite's default size. Throws
/// std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, std::optional<std::size_t> n_max = std::nullopt);

struct TableEntry {
  std::string code;  // table layout
  std::string perm;  // compact 0-based word
};

/// The three n = 4 reference tables in lex order of their codes:
/// 0 = Fisher-Yates, 1 = dual, 2 = inversion.
const std::vector<TableEntry>& reference_table(int which);

}  // namespace fyperm
