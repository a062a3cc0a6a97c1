#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgideal {

/* Command line driver. args excludes the program name. Returns the process
   exit code: 0 when every record passes, 1 when some verification fails,
   2 for structural errors (unreadable input, syntax errors, ill-typed
   declarations, usage mistakes). Machine-readable report on out, human
   summaries and errors on err. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgideal
