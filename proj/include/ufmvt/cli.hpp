// cli.hpp -- command dispatcher, separated from main() so tests can drive
// it directly.  Exit codes: 0 ok, 2 usage, 3 resource guard, 4 internal
// consistency failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ufmvt {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ufmvt
