#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxsort::cli {

// Exit codes: 0 ok, 1 usage error, 2 computation error, 3 verification
// failures found.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace coxsort::cli
