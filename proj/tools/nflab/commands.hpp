#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nflab {

// Full CLI dispatch, in-process: `args` excludes the program name. Writes the
// JSON report to `out` and diagnostics to `err`. Exit code contract:
// 0 = claim verified / question answered, 2 = claim refuted or a precondition
// violated (witness or reason in the report), 1 = usage or input parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace nflab
