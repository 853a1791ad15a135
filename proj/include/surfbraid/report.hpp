#ifndef SURFBRAID_REPORT_HPP_
#define SURFBRAID_REPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace surfbraid {

// One named relation or identity checked in a model.
struct CheckResult {
  std::string name;
  bool holds = false;
  std::string detail;
};

using VerificationReport = std::vector<CheckResult>;

inline bool all_hold(const VerificationReport& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const CheckResult& c) { return c.holds; });
}

}  // namespace surfbraid

#endif  // SURFBRAID_REPORT_HPP_
