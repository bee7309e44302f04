#pragma once

#include <string>
#include <vector>

namespace towerlab {

/// One verified fact: a named check with an anchor label tying it to the
/// statement it certifies, plus the computed and expected values as strings.
struct CheckRecord {
  std::string name;
  std::string anchor;
  std::string computed;
  std::string expected;
  bool pass = false;
};

/// Ordered collection of check records for one verification suite.
/// Rendering is deterministic: records appear in insertion order.
struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  /// Adds a record; pass iff computed == expected.
  void add(const std::string& name, const std::string& anchor,
           const std::string& computed, const std::string& expected);

  /// Adds a record with an explicit verdict.
  void add_bool(const std::string& name, const std::string& anchor, bool ok,
                const std::string& computed = "", const std::string& expected = "");

  int failures() const;
  bool all_pass() const { return failures() == 0; }

  /// Aligned plain-text table, one record per line, with a summary footer.
  std::string text() const;

  /// JSON object: {"suite", "records": [...], "summary": {...}}.
  std::string json() const;
};

}  // namespace towerlab
