#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgm::cli {

// Runs the command line tool in-process: args excludes argv[0]. Payload goes
// to out, diagnostics to err. Returns the process exit code (0 ok, 2 invalid
// input, 3 cap exceeded, 4 origin not interior, 5 verification failed,
// 6 unsupported configuration).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgm::cli
