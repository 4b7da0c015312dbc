// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace angleforge::cli {

/// Runs the command line. Exit codes: 0 success, 1 invalid input or budget,
/// 2 violated mathematical invariant. Errors go to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace angleforge::cli
