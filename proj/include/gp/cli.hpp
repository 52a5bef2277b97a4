#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gp::cli {

/// Runs one CLI invocation. args holds the arguments after the program
/// name. Exit code 0 on success, 1 on domain rejection (invalid phrase,
/// inadmissible target, non-equivalence), 2 on usage errors.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace gp::cli
