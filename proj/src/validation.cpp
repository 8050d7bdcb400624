#include "starspec/validation.hpp"

namespace starspec {

Json ValidationReport::to_json() const {
  Json j;
  j["valid"] = valid;
  Json v = Json::array();
  for (const Violation& x : violations) {
    Json e{{"condition", x.condition}, {"message", x.message}};
    if (!x.indices.empty()) e["indices"] = x.indices;
    v.push_back(e);
  }
  j["violations"] = v;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string describe(const RealRoot& r) {
  if (r.is_exact()) return to_string(r.value());
  RealRoot t = refine_root(r.witness, r, Rational(1, 1000000000));
  return "~" + to_decimal(t.midpoint(), 6);
}

}  // namespace starspec
