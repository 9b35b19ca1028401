#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2flat {

/// Runs one command line (program name excluded), writing everything to
/// `out`. Exit-code contract: 0 all checks pass, 1 a check failed,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace g2flat
