#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace dgms {

// Command-line entry point; argv without the program name.
// Exit code 0 on success, 1 on input error, 2 on internal contract violation.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace dgms
