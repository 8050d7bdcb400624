#pragma once

#include <string>
#include <vector>

#include "starspec/serialize.hpp"

namespace starspec {

struct Violation {
  std::string condition;
  std::string message;
  std::vector<int> indices;  // 1-based positions in the sorted sequences
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  void fail(std::string condition, std::string message, std::vector<int> indices = {}) {
    valid = false;
    violations.push_back({std::move(condition), std::move(message), std::move(indices)});
  }
  Json to_json() const;
};

/// Label for a root in messages: exact value or "~decimal".
std::string describe(const RealRoot& r);

}  // namespace starspec
