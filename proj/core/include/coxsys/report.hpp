#pragma once

#include <string>
#include <vector>

namespace coxsys {

enum class Verdict { Pass, Fail };

// Outcome of one checked claim: the bound, the value achieved by the witness,
// and a human-readable witness description.
struct VerificationReport {
  std::string claim;
  double bound = 0.0;
  double achieved = 0.0;
  std::string witness;
  Verdict verdict = Verdict::Fail;
  std::string notes;

  bool passed() const { return verdict == Verdict::Pass; }
};

// Aggregate result of a CLI command.  exit_code: 0 all pass, 1 any fail,
// 2 input error.
struct RunReport {
  std::string command;
  std::vector<VerificationReport> reports;
  int exit_code = 0;
};

// Round to the given number of significant digits (used for report payloads;
// verdicts are always computed before rounding).
double round_sig(double x, int digits = 12);

std::string verdict_str(Verdict v);

}  // namespace coxsys
