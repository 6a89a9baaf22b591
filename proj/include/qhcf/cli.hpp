#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhcf::cli {

// Entry point behind the qhcf binary.  args excludes the program name.
// Returns 0 on success, 2 on usage errors (synopsis goes to err), 1 on
// computation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhcf::cli
