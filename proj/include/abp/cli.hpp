#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abp {

// Entry point shared by the abp binary and the in-process CLI tests.
// Exit codes: 0 solved/valid, 1 parse or usage errors, 2 no solution within
// bounds (or invalid conjecture), 3 node budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abp
