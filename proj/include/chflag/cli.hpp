#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chflag::cli {

// args excludes the program name. JSON/CSV results go to `out`, human
// summaries to `err`. Exit codes: 0 success, 1 failed verification or
// diff, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chflag::cli
