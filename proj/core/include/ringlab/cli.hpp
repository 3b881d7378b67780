#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab::cli {

// Exit codes: 0 success/pass, 1 property false or check fail,
// 2 parse error, 3 semantic error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringlab::cli
