#include "dropk/report.hpp"

namespace dropk {

void VerifyReport::merge(const VerifyReport& other) {
  cases += other.cases;
  violations += other.violations;
  if (!first_counterexample) first_counterexample = other.first_counterexample;
}

std::ostream& operator<<(std::ostream& os, const VerifyReport& r) {
  os << "check: " << r.check << '\n'
     << "cases: " << r.cases << '\n'
     << "violations: " << r.violations << '\n';
  if (r.first_counterexample) os << "counterexample: " << *r.first_counterexample << '\n';
  return os;
}

}  // namespace dropk
