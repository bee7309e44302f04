#include "towerlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace towerlab {

void Report::add(const std::string& name, const std::string& anchor,
                 const std::string& computed, const std::string& expected) {
  records.push_back({name, anchor, computed, expected, computed == expected});
}

void Report::add_bool(const std::string& name, const std::string& anchor, bool ok,
                      const std::string& computed, const std::string& expected) {
  records.push_back({name, anchor, computed, expected, ok});
}

int Report::failures() const {
  int n = 0;
  for (const auto& r : records)
    if (!r.pass) ++n;
  return n;
}

std::string Report::text() const {
  size_t wname = 4, wanchor = 6;
  for (const auto& r : records) {
    wname = std::max(wname, r.name.size());
    wanchor = std::max(wanchor, r.anchor.size());
  }
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  for (const auto& r : records) {
    os << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.name
       << std::string(wname - r.name.size() + 2, ' ') << "[" << r.anchor << "]"
       << std::string(wanchor - r.anchor.size() + 2, ' ');
    if (!r.computed.empty() || !r.expected.empty()) {
      os << "got " << r.computed;
      if (!r.expected.empty()) os << ", want " << r.expected;
    }
    os << "\n";
  }
  os << "  " << (records.size() - failures()) << "/" << records.size()
     << " checks passed\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    j["records"].push_back({{"name", r.name},
                            {"anchor", r.anchor},
                            {"computed", r.computed},
                            {"expected", r.expected},
                            {"status", r.pass ? "pass" : "fail"}});
  }
  j["summary"] = {{"total", records.size()},
                  {"failed", failures()},
                  {"all_pass", all_pass()}};
  return j.dump(2);
}

}  // namespace towerlab
