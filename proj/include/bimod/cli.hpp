#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bimod {

/// Runs one `bimodcat` invocation (args excludes the program name). Returns
/// 0 on pass, 1 on a failed check or computational error, 2 on a usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace bimod
