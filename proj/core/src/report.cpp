#include "coxsys/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace coxsys {

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string verdict_str(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

}  // namespace coxsys
