#pragma once

#include <string>
#include <vector>

namespace qcat {

// Reference tables rendered in a fixed textual layout for diff-based golden
// tests.  Row order and labels are fixed; every number in the output is
// recomputed from the library, so a regression in any statistic, bijection, or
// polynomial family shows up as a diff against the checked-in files.

// The known table ids, in display order.
std::vector<std::string> golden_ids();

bool is_golden_id(const std::string& id);

// The full text of one table, ending with a trailing newline.
// Throws std::invalid_argument on an unknown id.
std::string golden_text(const std::string& id);

}  // namespace qcat
