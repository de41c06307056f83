#pragma once

#include <string>
#include <vector>

namespace hopfcode {

struct VerifyEntry {
  std::string key;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;

  void add(std::string key, bool pass, std::string detail = "") {
    entries.push_back({std::move(key), pass, std::move(detail)});
  }
  void add(VerifyEntry e) { entries.push_back(std::move(e)); }

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

}  // namespace hopfcode
