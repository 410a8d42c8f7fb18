#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subalg {

// Full command dispatch, separated from main() so tests can drive it
// in-process. args excludes the program name. Exit codes: 0 success or
// certified; 1 usage, parse, or input errors; 2 typed classification
// rejections and suite violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace subalg
