#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqmzv {

/// Entry point behind the fqmzv binary; takes argv-style arguments without
/// the program name. Returns 0 on success, 1 when a suite reports failures
/// (or both routes of a --method both call disagree), 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqmzv
