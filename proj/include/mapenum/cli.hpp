#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mapenum {

/// Exit codes: 0 success, 1 verification mismatch, 2 usage or precondition error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapenum
