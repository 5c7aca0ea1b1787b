#ifndef MAGICWIN_CLI_HPP
#define MAGICWIN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace magicwin {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 domain error, 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magicwin

#endif
