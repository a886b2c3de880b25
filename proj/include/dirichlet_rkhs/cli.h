#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dirichlet_rkhs::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on usage errors and 1 on computation errors; the latter two write a
/// JSON error object to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirichlet_rkhs::cli
