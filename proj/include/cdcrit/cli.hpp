#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdcrit::cli {

// Entry point used by both the binary and the tests. args excludes argv[0].
// Commands: gen, analyze, verify-theorem, path, witness.
// Budgets come from flags, falling back to CDCRIT_MAX_N / CDCRIT_TIME_BUDGET_S.
// Reports are deterministic apart from the delimited timings block.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Strips the "--- timings ---" .. "--- end timings ---" block (text format) and
// {"type":"timings"...} lines (structured format); used for golden comparisons.
std::string strip_timings(const std::string& report);

} // namespace cdcrit::cli
