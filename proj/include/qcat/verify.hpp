#pragma once

#include <string>
#include <vector>

namespace qcat {

// One registered identity check.  `pass` reflects the mechanical outcome;
// checks marked `expected_fail` are documented counterexamples (variants of
// an identity as printed in a flawed form) that are supposed to fail.
struct VerificationReport {
  std::string id;
  bool pass = false;
  bool expected_fail = false;
  std::string bounds;  // e.g. "r<=3 n<=5" or "order<=12"
  std::string detail;  // witness and both sides on failure, empty on pass
};

// All registered ids in canonical order.
std::vector<std::string> verification_ids();

// The ids swept by "verify all": every check that is supposed to pass
// (the expected-fail counterexample variants are excluded).
std::vector<std::string> default_verification_ids();

bool is_expected_fail_id(const std::string& id);
bool is_verification_id(const std::string& id);

// Runs one check.  n_max/r_max of 0 select the registered default bounds
// (n_max doubles as the truncation order for the series checks).  Throws
// std::invalid_argument for unknown ids.
VerificationReport run_verification(const std::string& id, int n_max = 0,
                                    int r_max = 0);

// Runs several checks, optionally fanning out across threads; reports come
// back in input order regardless.
std::vector<VerificationReport> run_verifications(
    const std::vector<std::string>& ids, int n_max = 0, int r_max = 0,
    bool parallel = false);

}  // namespace qcat
