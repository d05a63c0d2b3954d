#ifndef GSP4_REPORT_HPP
#define GSP4_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace gsp4 {

// One verification check, possibly aggregating children.  Timing is kept out
// of the default payload so repeated runs are byte-identical.
struct VerifyReport {
  std::string check;
  std::map<std::string, std::string> params;
  std::string status = "pass";  // pass | fail | skipped
  std::string witness;
  long millis = 0;
  long checks = 0;  // number of elementary comparisons performed
  std::vector<VerifyReport> children;

  bool ok() const;
  void set_fail(const std::string& w);
  void add(VerifyReport child);  // propagates a child failure to this node
};

std::string report_to_json(const VerifyReport& r);

// Flat text rendering: one "status check witness" line per node.
std::string report_to_text(const VerifyReport& r);

}  // namespace gsp4

#endif
