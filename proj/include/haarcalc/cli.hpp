#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace haarcalc {

// Dispatches one CLI invocation. Results (JSON) go to `out`, diagnostics to
// `err`. Returns 0 when every verdict passes, 1 on a failed verdict, 2 on a
// usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace haarcalc
