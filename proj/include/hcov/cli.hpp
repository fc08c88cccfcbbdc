#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hcov {

namespace exit_code {
constexpr int ok = 0;
constexpr int internal = 1;
constexpr int validation = 2;
constexpr int not_converged = 3;
} // namespace exit_code

/// Runs the hecke-covers command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hcov
