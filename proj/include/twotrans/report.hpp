#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace twotrans {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& i) { return i.pass; });
  }
  int failure_count() const {
    return static_cast<int>(std::count_if(
        items.begin(), items.end(), [](const CheckItem& i) { return !i.pass; }));
  }
};

}  // namespace twotrans
