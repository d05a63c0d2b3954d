#include "gsp4/report.hpp"

#include <json.hpp>

#include <sstream>

namespace gsp4 {

bool VerifyReport::ok() const {
  if (status == "fail") return false;
  for (const auto& c : children)
    if (!c.ok()) return false;
  return true;
}

void VerifyReport::set_fail(const std::string& w) {
  status = "fail";
  if (witness.empty()) witness = w;
}

void VerifyReport::add(VerifyReport child) {
  if (!child.ok() && status != "fail") {
    status = "fail";
    if (witness.empty())
      witness = child.witness.empty() ? ("child failed: " + child.check) : child.witness;
  }
  checks += child.checks;
  children.push_back(std::move(child));
}

namespace {

nlohmann::ordered_json to_j(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["status"] = r.status;
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["millis"] = r.millis;
  j["checks"] = r.checks;
  if (!r.children.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.children) arr.push_back(to_j(c));
    j["children"] = arr;
  }
  return j;
}

void to_text(const VerifyReport& r, int depth, std::ostringstream& os) {
  for (int i = 0; i < depth; ++i) os << "  ";
  os << r.status << " " << r.check;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  if (!r.witness.empty()) os << " witness=" << r.witness;
  os << "\n";
  for (const auto& c : r.children) to_text(c, depth + 1, os);
}

}  // namespace

std::string report_to_json(const VerifyReport& r) { return to_j(r).dump(2) + "\n"; }

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  to_text(r, 0, os);
  return os.str();
}

}  // namespace gsp4
